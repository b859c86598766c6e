//! Exact linear solving over the rational-function field.
//!
//! Rows are first cleared of denominators, then eliminated fraction-free in
//! the polynomial ring (Bareiss: every interior division is exact), with
//! first-nonzero pivoting. Only the final results are formed as reduced
//! rational functions. Running the elimination itself over the fraction
//! field would force a polynomial gcd per operation, whose rational
//! coefficients blow up badly already around a dozen rows.

use crate::algebra::poly::Polynomial;
use crate::algebra::ratfunc::RationalFunction;
use crate::error::{Error, Result};

fn check_square(matrix: &[Vec<RationalFunction>]) {
    let n = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == n),
        "matrix must be square"
    );
}

fn div_exact(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "inexact division in fraction-free elimination");
    q
}

// Multiply each row by the least common multiple of its denominators; the
// solution is unchanged and the determinant picks up the product of the
// clearing factors.
fn clear_rows(rows: Vec<Vec<RationalFunction>>) -> (Vec<Vec<Polynomial>>, Vec<Polynomial>) {
    let mut cleared = Vec::with_capacity(rows.len());
    let mut factors = Vec::with_capacity(rows.len());
    for row in rows {
        let mut lcm = Polynomial::one();
        for entry in &row {
            let g = Polynomial::gcd(&lcm, entry.den());
            lcm = &lcm * &div_exact(entry.den(), &g);
        }
        let polys = row
            .iter()
            .map(|entry| entry.num() * &div_exact(&lcm, entry.den()))
            .collect();
        cleared.push(polys);
        factors.push(lcm);
    }
    (cleared, factors)
}

struct Elimination {
    // upper triangular rows, wider than square when augmented
    rows: Vec<Vec<Polynomial>>,
    negate: bool,
}

// Fraction-free forward elimination on `n` pivot columns; extra columns ride
// along. Fails with the offending column when no nonzero pivot exists.
fn bareiss(mut rows: Vec<Vec<Polynomial>>, n: usize) -> Result<Elimination> {
    let width = rows.first().map_or(0, Vec::len);
    let mut negate = false;
    let mut prev = Polynomial::one();
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or(Error::Singular { column: col })?;
        if pivot_row != col {
            rows.swap(col, pivot_row);
            negate = !negate;
        }
        let (pivot_part, rest) = rows.split_at_mut(col + 1);
        let pivot_row = &pivot_part[col];
        let pivot = pivot_row[col].clone();
        for row in rest {
            for j in col + 1..width {
                let t = &(&pivot * &row[j]) - &(&row[col] * &pivot_row[j]);
                row[j] = div_exact(&t, &prev);
            }
            row[col] = Polynomial::zero();
        }
        prev = pivot;
    }
    Ok(Elimination { rows, negate })
}

/// Solve `matrix * x = rhs` exactly.
///
/// Fails with [`Error::Singular`] carrying the pivot column where
/// elimination ran out of nonzero entries.
pub fn solve_linear(
    matrix: &[Vec<RationalFunction>],
    rhs: &[RationalFunction],
) -> Result<Vec<RationalFunction>> {
    check_square(matrix);
    let n = matrix.len();
    assert_eq!(rhs.len(), n, "rhs length must match matrix size");
    if n == 0 {
        return Ok(Vec::new());
    }

    let augmented: Vec<Vec<RationalFunction>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut wide = row.clone();
            wide.push(b.clone());
            wide
        })
        .collect();
    let (rows, _) = clear_rows(augmented);
    let u = bareiss(rows, n)?.rows;

    // After fraction-free elimination the last pivot is (up to sign) the
    // determinant of the cleared matrix, and every solution component is a
    // polynomial over that common denominator: back-substitution stays in
    // the polynomial ring with exact divisions.
    let det = u[n - 1][n - 1].clone();
    let mut numerators = vec![Polynomial::zero(); n];
    for i in (0..n).rev() {
        let mut acc = &u[i][n] * &det;
        for j in i + 1..n {
            acc = &acc - &(&u[i][j] * &numerators[j]);
        }
        numerators[i] = div_exact(&acc, &u[i][i]);
    }
    numerators
        .into_iter()
        .map(|num| RationalFunction::new(num, det.clone()))
        .collect()
}

/// Exact determinant; zero exactly when [`solve_linear`] reports a singular
/// system.
pub fn determinant(matrix: &[Vec<RationalFunction>]) -> RationalFunction {
    check_square(matrix);
    let n = matrix.len();
    if n == 0 {
        return RationalFunction::one();
    }
    let (rows, factors) = clear_rows(matrix.to_vec());
    let elim = match bareiss(rows, n) {
        Ok(elim) => elim,
        Err(Error::Singular { .. }) => return RationalFunction::zero(),
        Err(_) => unreachable!("bareiss only fails as singular"),
    };
    let mut num = elim.rows[n - 1][n - 1].clone();
    if elim.negate {
        num = -&num;
    }
    let scale = factors.iter().fold(Polynomial::one(), |acc, f| &acc * f);
    RationalFunction::new(num, scale).expect("clearing factors are nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use proptest::prelude::*;

    fn c(v: i64) -> RationalFunction {
        RationalFunction::constant(rat(v))
    }

    /// Independent oracle: determinant by cofactor expansion along row 0.
    fn cofactor_det(m: &[Vec<RationalFunction>]) -> RationalFunction {
        let n = m.len();
        if n == 0 {
            return RationalFunction::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = RationalFunction::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<RationalFunction>> = (1..n)
                .map(|r| {
                    (0..n)
                        .filter(|&k| k != j)
                        .map(|k| m[r][k].clone())
                        .collect()
                })
                .collect();
            let mut term = &m[0][j] * &cofactor_det(&minor);
            if j % 2 == 1 {
                term = -&term;
            }
            acc = &acc + &term;
        }
        acc
    }

    #[test]
    fn identity_system() {
        let m = vec![vec![c(1), c(0)], vec![c(0), c(1)]];
        let rhs = vec![c(7), c(9)];
        assert_eq!(solve_linear(&m, &rhs).unwrap(), rhs);
        assert_eq!(determinant(&m), c(1));
    }

    #[test]
    fn hand_checked_2x2() {
        let m = vec![vec![c(1), c(1)], vec![c(1), c(-1)]];
        let rhs = vec![c(2), c(0)];
        assert_eq!(solve_linear(&m, &rhs).unwrap(), vec![c(1), c(1)]);
        assert_eq!(determinant(&m), c(-2));
    }

    #[test]
    fn repeated_row_is_singular() {
        let m = vec![vec![c(1), c(2)], vec![c(1), c(2)]];
        assert!(determinant(&m).is_zero());
        match solve_linear(&m, &[c(1), c(1)]) {
            Err(Error::Singular { column }) => assert_eq!(column, 1),
            other => panic!("expected singular error, got {other:?}"),
        }
    }

    #[test]
    fn pivoting_handles_leading_zero() {
        // Needs a row swap on the first column.
        let m = vec![vec![c(0), c(1)], vec![c(1), c(0)]];
        let rhs = vec![c(3), c(4)];
        assert_eq!(solve_linear(&m, &rhs).unwrap(), vec![c(4), c(3)]);
        assert_eq!(determinant(&m), c(-1));
    }

    #[test]
    fn rational_function_entries() {
        // Denominator clearing: [[1/(z-1), 1], [0, z]] x = [1, z^2].
        let z = Polynomial::variable();
        let m = vec![
            vec![
                RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[-1, 1])).unwrap(),
                RationalFunction::one(),
            ],
            vec![
                RationalFunction::zero(),
                RationalFunction::from_poly(z.clone()),
            ],
        ];
        let rhs = vec![
            RationalFunction::one(),
            RationalFunction::from_poly(&z * &z),
        ];
        let x = solve_linear(&m, &rhs).unwrap();
        // Second component is z; first solves (1/(z-1)) x0 + z = 1.
        assert_eq!(x[1], RationalFunction::from_poly(z.clone()));
        let back = &(&m[0][0] * &x[0]) + &x[1];
        assert_eq!(back, RationalFunction::one());
    }

    fn entry() -> impl Strategy<Value = RationalFunction> {
        prop::collection::vec(-3i64..=3, 0..=2)
            .prop_map(|v| RationalFunction::from_poly(Polynomial::from_ints(&v)))
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<RationalFunction>>> {
        prop::collection::vec(prop::collection::vec(entry(), n), n)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn solve_is_exact(m in small_matrix(3), rhs in prop::collection::vec(entry(), 3)) {
            match solve_linear(&m, &rhs) {
                Ok(x) => {
                    for (row, want) in m.iter().zip(&rhs) {
                        let mut acc = RationalFunction::zero();
                        for (a, xi) in row.iter().zip(&x) {
                            acc = &acc + &(a * xi);
                        }
                        prop_assert_eq!(&acc, want);
                    }
                    prop_assert!(!determinant(&m).is_zero());
                }
                Err(Error::Singular { .. }) => {
                    prop_assert!(determinant(&m).is_zero());
                }
                Err(e) => return Err(TestCaseError::fail(format!("unexpected error {e}"))),
            }
        }

        #[test]
        fn elimination_matches_cofactor_expansion(m in small_matrix(3)) {
            prop_assert_eq!(determinant(&m), cofactor_det(&m));
        }
    }
}
