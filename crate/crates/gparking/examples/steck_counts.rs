//! Counting lambda-parking functions two ways: brute-force enumeration and
//! n! times a Steck determinant, all in exact rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;

use gparking::formulas::{lambda_pf_count_steck, steck_det};
use gparking::parking::{enumerate_lambda_pf, LambdaVector};

fn main() -> gparking::Result<()> {
    for entries in [vec![2u64, 1], vec![3, 2, 1], vec![4, 4, 2, 1], vec![5, 3, 3, 2, 1]] {
        let lambda = LambdaVector::new(entries.clone())?;
        let rationals: Vec<BigRational> = entries
            .iter()
            .map(|&l| BigRational::from_integer(BigInt::from(l)))
            .collect();
        let det = steck_det(&rationals)?;
        let count = lambda_pf_count_steck(&lambda)?;
        let brute = enumerate_lambda_pf(&lambda)?.len();
        println!("lambda = {entries:?}: det = {det}, n!*det = {count}, enumeration = {brute}");
        assert_eq!(count, BigInt::from(brute as u64));
    }
    Ok(())
}
