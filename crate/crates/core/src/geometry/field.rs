use crate::error::{Error, Result};

/// An element of GF(q), stored as its canonical representative in `0..q`.
///
/// For prime q the representative is the residue itself. For q = p^d the
/// base-p digits of the representative are the polynomial coefficients,
/// constant term first, so `x` in GF(4) is 2 and `x + 1` is 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    pub rep: u8,
}

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement { rep: 0 };
    pub const ONE: FieldElement = FieldElement { rep: 1 };
}

/// Irreducible polynomials for the supported non-prime orders, as
/// (q, p, low coefficients x^0..x^{d-1} of the monic polynomial).
const PRIME_POWERS: &[(u32, u32, &[u32])] = &[
    (4, 2, &[1, 1]),        // x^2 + x + 1
    (8, 2, &[1, 1, 0]),     // x^3 + x + 1
    (9, 3, &[1, 0]),        // x^2 + 1
    (16, 2, &[1, 1, 0, 0]), // x^4 + x + 1
];

/// Arithmetic tables for GF(q).
#[derive(Debug, Clone)]
pub struct Field {
    q: u32,
    p: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

fn is_prime(n: u32) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

impl Field {
    /// Supported orders: primes below 256, and 4, 8, 9, 16.
    pub fn new(q: u32) -> Result<Field> {
        if is_prime(q) && q < 256 {
            let add = table(q, |a, b| (a + b) % q);
            let mul = table(q, |a, b| (a * b) % q);
            return Ok(Self::finish(q, q, add, mul));
        }
        let &(_, p, low) = PRIME_POWERS
            .iter()
            .find(|e| e.0 == q)
            .ok_or(Error::UnsupportedFieldOrder(q))?;
        let d = low.len();
        let digits = |mut a: u32| -> Vec<u32> {
            (0..d)
                .map(|_| {
                    let r = a % p;
                    a /= p;
                    r
                })
                .collect()
        };
        let pack = |c: &[u32]| c.iter().rev().fold(0, |acc, &x| acc * p + x);
        let add = table(q, |a, b| {
            let (x, y) = (digits(a), digits(b));
            pack(
                &x.iter()
                    .zip(&y)
                    .map(|(s, t)| (s + t) % p)
                    .collect::<Vec<_>>(),
            )
        });
        let mul = table(q, |a, b| {
            let (x, y) = (digits(a), digits(b));
            let mut prod = vec![0u32; 2 * d - 1];
            for i in 0..d {
                for j in 0..d {
                    prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
                }
            }
            // Reduce with x^d = -(low coefficients).
            for deg in (d..2 * d - 1).rev() {
                let c = prod[deg];
                if c != 0 {
                    prod[deg] = 0;
                    for (i, &l) in low.iter().enumerate() {
                        let sub = c * l % p;
                        prod[deg - d + i] = (prod[deg - d + i] + p - sub) % p;
                    }
                }
            }
            pack(&prod[..d])
        });
        Ok(Self::finish(q, p, add, mul))
    }

    fn finish(q: u32, p: u32, add: Vec<u8>, mul: Vec<u8>) -> Field {
        let qs = q as usize;
        let neg = (0..qs)
            .map(|a| (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u8)
            .collect();
        let inv = (0..qs)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap_or(0) as u8
                }
            })
            .collect();
        Field {
            q,
            p,
            add,
            mul,
            neg,
            inv,
        }
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(|r| FieldElement { rep: r as u8 })
    }

    pub fn element(&self, rep: u32) -> Result<FieldElement> {
        if rep < self.q {
            Ok(FieldElement { rep: rep as u8 })
        } else {
            Err(Error::invalid(format!(
                "{rep} is not an element of GF({})",
                self.q
            )))
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement {
            rep: self.add[a.rep as usize * self.q as usize + b.rep as usize],
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement {
            rep: self.mul[a.rep as usize * self.q as usize + b.rep as usize],
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement {
            rep: self.neg[a.rep as usize],
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (a.rep != 0).then(|| FieldElement {
            rep: self.inv[a.rep as usize],
        })
    }

    pub fn dot(&self, u: &[FieldElement; 3], v: &[FieldElement; 3]) -> FieldElement {
        let mut s = FieldElement::ZERO;
        for i in 0..3 {
            s = self.add(s, self.mul(u[i], v[i]));
        }
        s
    }
}

fn table(q: u32, f: impl Fn(u32, u32) -> u32) -> Vec<u8> {
    let mut t = Vec::with_capacity((q * q) as usize);
    for a in 0..q {
        for b in 0..q {
            t.push(f(a, b) as u8);
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &Field) {
        let els: Vec<_> = f.elements().collect();
        let (zero, one) = (FieldElement::ZERO, FieldElement::ONE);
        for &a in &els {
            assert_eq!(f.add(a, zero), a);
            assert_eq!(f.mul(a, one), a);
            assert_eq!(f.add(a, f.neg(a)), zero);
            if a != zero {
                assert_eq!(
                    f.mul(a, f.inv(a).unwrap()),
                    one,
                    "GF({}) inverse of {a:?}",
                    f.order()
                );
            }
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                if a != zero && b != zero {
                    assert_ne!(f.mul(a, b), zero, "zero divisor in GF({})", f.order());
                }
                for &c in &els {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_up_to_16() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            check_axioms(&Field::new(q).unwrap());
        }
    }

    #[test]
    fn unsupported_orders() {
        for q in [0, 1, 6, 10, 12, 25, 27, 32, 257] {
            assert!(
                matches!(Field::new(q), Err(Error::UnsupportedFieldOrder(_))),
                "q={q}"
            );
        }
        assert!(Field::new(251).is_ok());
    }

    #[test]
    fn small_facts() {
        let f2 = Field::new(2).unwrap();
        assert_eq!(
            f2.add(FieldElement::ONE, FieldElement::ONE),
            FieldElement::ZERO
        );
        // In GF(4), x * (x + 1) = x^2 + x = 1.
        let f4 = Field::new(4).unwrap();
        let x = f4.element(2).unwrap();
        let x1 = f4.element(3).unwrap();
        assert_eq!(f4.mul(x, x1), FieldElement::ONE);
        assert_eq!(f4.characteristic(), 2);
        // In GF(9), x^2 = -1 = 2.
        let f9 = Field::new(9).unwrap();
        let x = f9.element(3).unwrap();
        assert_eq!(f9.mul(x, x).rep, 2);
    }
}
