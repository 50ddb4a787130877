//! Finite field tables and mutually orthogonal Latin squares (MOLS).
//!
//! Field elements of GF(p^e) are encoded as integers whose base-p digits
//! are polynomial coefficients (digit i = coefficient of x^i). Addition and
//! multiplication tables are materialized once and verified exhaustively
//! against the field axioms, so every consumer works from checked tables.

use thiserror::Error;

/// Orders with a hard-coded irreducible polynomial (or plain prime arithmetic).
pub const SUPPORTED_ORDERS: &[u32] = &[2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatinError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("order {0} is not supported; supported orders: {SUPPORTED_ORDERS:?}")]
    UnsupportedOrder(u32),
}

/// Irreducible polynomial for GF(p^e), constant coefficient first, monic.
fn modulus_polynomial(p: u32, e: u32) -> Option<&'static [u16]> {
    match (p, e) {
        (2, 2) => Some(&[1, 1, 1]),       // x^2 + x + 1
        (2, 3) => Some(&[1, 1, 0, 1]),    // x^3 + x + 1
        (2, 4) => Some(&[1, 1, 0, 0, 1]), // x^4 + x + 1
        (3, 2) => Some(&[1, 0, 1]),       // x^2 + 1
        (3, 3) => Some(&[1, 2, 0, 1]),    // x^3 + 2x + 1
        (5, 2) => Some(&[2, 0, 1]),       // x^2 + 2
        _ => None,
    }
}

fn prime_power_decomposition(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            return (rest == 1).then_some((p, e));
        }
        p += 1;
    }
    Some((q, 1))
}

/// Addition and multiplication tables for GF(q).
#[derive(Debug, Clone)]
pub struct FieldTable {
    q: u32,
    add: Vec<u16>,
    mul: Vec<u16>,
}

/// Builds checked arithmetic tables for GF(q).
///
/// Fails for non-prime-powers and for prime powers beyond the supported
/// list. The constructed tables are verified against all field axioms by
/// exhaustive enumeration before being returned.
pub fn build_field(q: u32) -> Result<FieldTable, LatinError> {
    let (p, e) = prime_power_decomposition(q).ok_or(LatinError::NotPrimePower(q))?;
    if !SUPPORTED_ORDERS.contains(&q) {
        return Err(LatinError::UnsupportedOrder(q));
    }

    let add;
    let mul;
    if e == 1 {
        add = table(q, |a, b| (a + b) % q);
        mul = table(q, |a, b| (a * b) % q);
    } else {
        let poly = modulus_polynomial(p, e).expect("supported prime powers have a modulus");
        add = table(q, |a, b| add_poly(a, b, p, e));
        mul = table(q, |a, b| mul_poly(a, b, p, e, poly));
    }
    let field = FieldTable { q, add, mul };
    field.verify_axioms();
    Ok(field)
}

fn table(q: u32, f: impl Fn(u32, u32) -> u32) -> Vec<u16> {
    let mut t = vec![0u16; (q * q) as usize];
    for a in 0..q {
        for b in 0..q {
            t[(a * q + b) as usize] = f(a, b) as u16;
        }
    }
    t
}

fn digits(mut x: u32, p: u32, e: u32) -> Vec<u32> {
    let mut d = vec![0; e as usize];
    for slot in d.iter_mut() {
        *slot = x % p;
        x /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn add_poly(a: u32, b: u32, p: u32, e: u32) -> u32 {
    let da = digits(a, p, e);
    let db = digits(b, p, e);
    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
    undigits(&sum, p)
}

fn mul_poly(a: u32, b: u32, p: u32, e: u32, poly: &[u16]) -> u32 {
    let da = digits(a, p, e);
    let db = digits(b, p, e);
    let mut prod = vec![0u32; 2 * e as usize - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // Reduce modulo the (monic) irreducible polynomial.
    for d in (e as usize..prod.len()).rev() {
        let c = prod[d];
        if c != 0 {
            prod[d] = 0;
            for (j, &pc) in poly.iter().enumerate().take(e as usize) {
                let idx = d - e as usize + j;
                prod[idx] = (prod[idx] + c * (p - pc as u32 % p)) % p;
            }
        }
    }
    undigits(&prod[..e as usize], p)
}

impl FieldTable {
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize] as u32
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize] as u32
    }

    /// Exhaustive field-axiom check; cheap for all supported orders.
    fn verify_axioms(&self) {
        let q = self.q;
        for a in 0..q {
            assert_eq!(self.add(a, 0), a);
            assert_eq!(self.mul(a, 1 % q), a % q);
            assert_eq!(self.mul(a, 0), 0);
            assert!((0..q).any(|b| self.add(a, b) == 0), "missing additive inverse");
            if a != 0 {
                assert!((0..q).any(|b| self.mul(a, b) == 1), "missing multiplicative inverse");
            }
            for b in 0..q {
                assert_eq!(self.add(a, b), self.add(b, a));
                assert_eq!(self.mul(a, b), self.mul(b, a));
                for c in 0..q {
                    assert_eq!(self.add(self.add(a, b), c), self.add(a, self.add(b, c)));
                    assert_eq!(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c)));
                    assert_eq!(
                        self.mul(a, self.add(b, c)),
                        self.add(self.mul(a, b), self.mul(a, c))
                    );
                }
            }
        }
    }
}

/// A square grid of symbols `0..order`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    order: u32,
    cells: Vec<u16>,
}

impl LatinSquare {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn get(&self, row: u32, col: u32) -> u32 {
        self.cells[(row * self.order + col) as usize] as u32
    }
}

/// The k-1 squares L_s with L_s[i][j] = s*i + j over GF(k), for each
/// nonzero field element s in ascending encoding order.
pub fn generate_mols(k: u32) -> Result<Vec<LatinSquare>, LatinError> {
    let field = build_field(k)?;
    let mut squares = Vec::new();
    for s in 1..k {
        let mut cells = vec![0u16; (k * k) as usize];
        for i in 0..k {
            for j in 0..k {
                cells[(i * k + j) as usize] = field.add(field.mul(s, i), j) as u16;
            }
        }
        squares.push(LatinSquare { order: k, cells });
    }
    Ok(squares)
}

/// Every row and every column is a permutation of the symbols.
pub fn is_latin(square: &LatinSquare) -> bool {
    let k = square.order;
    for i in 0..k {
        let mut row_seen = vec![false; k as usize];
        let mut col_seen = vec![false; k as usize];
        for j in 0..k {
            let r = square.get(i, j) as usize;
            let c = square.get(j, i) as usize;
            if r >= k as usize || c >= k as usize || row_seen[r] || col_seen[c] {
                return false;
            }
            row_seen[r] = true;
            col_seen[c] = true;
        }
    }
    true
}

/// Cell-wise pairing of two squares of the same order, row-major.
pub fn juxtapose(a: &LatinSquare, b: &LatinSquare) -> Vec<(u32, u32)> {
    assert_eq!(a.order, b.order);
    let k = a.order;
    let mut pairs = Vec::with_capacity((k * k) as usize);
    for i in 0..k {
        for j in 0..k {
            pairs.push((a.get(i, j), b.get(i, j)));
        }
    }
    pairs
}

/// Orthogonal when the juxtaposition hits every symbol pair exactly once.
pub fn are_orthogonal(a: &LatinSquare, b: &LatinSquare) -> bool {
    let k = a.order as usize;
    let mut seen = vec![false; k * k];
    for (x, y) in juxtapose(a, b) {
        let idx = x as usize * k + y as usize;
        if seen[idx] {
            return false;
        }
        seen[idx] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_prime_powers_and_unsupported_orders() {
        assert_eq!(build_field(6).unwrap_err(), LatinError::NotPrimePower(6));
        assert_eq!(build_field(12).unwrap_err(), LatinError::NotPrimePower(12));
        assert_eq!(build_field(1).unwrap_err(), LatinError::NotPrimePower(1));
        assert_eq!(build_field(0).unwrap_err(), LatinError::NotPrimePower(0));
        // 32 = 2^5 is a prime power without a hard-coded modulus.
        assert_eq!(build_field(32).unwrap_err(), LatinError::UnsupportedOrder(32));
        let msg = build_field(32).unwrap_err().to_string();
        assert!(msg.contains("supported orders"));
    }

    #[test]
    fn all_supported_fields_build_and_verify() {
        for &q in SUPPORTED_ORDERS {
            let f = build_field(q).unwrap();
            assert_eq!(f.order(), q);
        }
    }

    #[test]
    fn gf4_multiplication_matches_known_table() {
        // Elements 0, 1, x=2, x+1=3 with x^2 = x + 1.
        let f = build_field(4).unwrap();
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.mul(3, 3), 2);
        assert_eq!(f.add(2, 3), 1);
    }

    #[test]
    fn mols_counts_and_orthogonality() {
        for &k in &[2u32, 3, 4, 5, 7, 8, 9] {
            let squares = generate_mols(k).unwrap();
            assert_eq!(squares.len(), (k - 1) as usize);
            for s in &squares {
                assert!(is_latin(s));
            }
            for i in 0..squares.len() {
                for j in i + 1..squares.len() {
                    assert!(are_orthogonal(&squares[i], &squares[j]));
                }
            }
        }
    }

    #[test]
    fn identical_squares_are_not_orthogonal() {
        let squares = generate_mols(3).unwrap();
        assert!(!are_orthogonal(&squares[0], &squares[0]));
        assert_eq!(juxtapose(&squares[0], &squares[0]).len(), 9);
    }

    #[test]
    fn generate_mols_is_deterministic() {
        assert_eq!(generate_mols(9).unwrap(), generate_mols(9).unwrap());
    }

    #[test]
    fn mols_first_square_is_cayley_like() {
        let squares = generate_mols(5).unwrap();
        // L_1[i][j] = i + j mod 5.
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(squares[0].get(i, j), (i + j) % 5);
            }
        }
    }
}
