//! Dirichlet characters modulo `q`.
//!
//! `(Z/qZ)^*` is split into cyclic components, one per odd prime power (smallest
//! primitive root) and up to two for the power of two (`-1` and `5`). Each
//! generator is lifted to `Z/qZ` by CRT and a discrete-log table gives every
//! unit its exponent vector. Characters are enumerated lexicographically in
//! their own exponent vectors, so index 0 is the principal character. This is
//! not the Conrey labelling.
//!
//! Values are kept as exact exponents `k` of `e^{2πik/L}`, `L` the exponent of
//! the group, next to the floating-point table.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct CyclicComponent {
    /// Generator lifted to `Z/qZ`.
    generator: u64,
    order: u64,
}

/// A Dirichlet character modulo `q` with its full value table.
#[derive(Clone, Debug, PartialEq)]
pub struct DirichletCharacter {
    modulus: u64,
    index: usize,
    /// Denominator `L` of the exact exponents.
    root_order: u64,
    exponents: Vec<Option<u64>>,
    values: Vec<Complex64>,
    parity: u8,
    conductor: u64,
}

/// `τ(χ) = Σ_{m=1}^{q} χ(m) e^{2πim/q}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussSumValue {
    pub value: Complex64,
    pub modulus: u64,
}

impl DirichletCharacter {
    /// The character with the given index in the enumeration of
    /// [`character_group`].
    pub fn new(modulus: u64, index: usize) -> Result<Self> {
        let group = UnitGroup::new(modulus);
        let count = group.size();
        if index >= count {
            return Err(Error::NoSuchCharacter {
                modulus,
                index,
                count,
            });
        }
        Ok(group.character(index))
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// `α`: 0 for even characters, 1 for odd ones.
    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.modulus
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().flatten().all(|&k| k == 0)
    }

    /// `χ(n)` for any integer `n`.
    pub fn value(&self, n: i64) -> Complex64 {
        self.values[n.rem_euclid(self.modulus as i64) as usize]
    }

    /// Table `χ(0), …, χ(q-1)`.
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Exact value `χ(n) = e^{2πik/L}` as `Some((k, L))` with the fraction
    /// reduced, or `None` when `gcd(n, q) > 1`.
    pub fn exact_value(&self, n: u64) -> Option<(u64, u64)> {
        self.exponents[(n % self.modulus) as usize].map(|k| {
            let g = gcd(k, self.root_order);
            (k / g, self.root_order / g)
        })
    }

    /// Order of `χ` as an element of the character group.
    pub fn order(&self) -> u64 {
        self.exponents
            .iter()
            .flatten()
            .map(|&k| self.root_order / gcd(k, self.root_order))
            .fold(1, lcm)
    }

    /// The complex-conjugate character (same modulus).
    pub fn conjugate(&self) -> Self {
        let group = UnitGroup::new(self.modulus);
        let target: Vec<Option<u64>> = self
            .exponents
            .iter()
            .map(|e| e.map(|k| (self.root_order - k) % self.root_order))
            .collect();
        (0..group.size())
            .map(|i| group.character(i))
            .find(|c| c.exponents == target)
            .expect("conjugate of a character is a character")
    }

    pub fn gauss_sum(&self) -> GaussSumValue {
        gauss_sum(self)
    }

    /// The primitive character modulo the conductor that induces `self`.
    pub fn inducing_primitive(&self) -> Self {
        let f = self.conductor;
        character_group(f)
            .into_iter()
            .find(|cand| {
                cand.is_primitive()
                    && (1..self.modulus).all(|n| match self.exponents[n as usize] {
                        None => true,
                        Some(k) => {
                            let k2 = cand.exponents[(n % f) as usize]
                                .expect("unit mod q is a unit mod f");
                            k * cand.root_order == k2 * self.root_order
                        }
                    })
            })
            .expect("every character is induced by a primitive one")
    }

    /// Short label for `χ(n)`: `0`, `1`, `-1`, `i`, `-i` or `e(k/L)`.
    pub fn value_label(&self, n: u64) -> String {
        match self.exact_value(n) {
            None => "0".into(),
            Some((0, _)) => "1".into(),
            Some((1, 2)) => "-1".into(),
            Some((1, 4)) => "i".into(),
            Some((3, 4)) => "-i".into(),
            Some((k, l)) => format!("e({k}/{l})"),
        }
    }
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi_{}[{}]", self.modulus, self.index)
    }
}

/// All `φ(q)` characters modulo `q`, principal first.
pub fn character_group(q: u64) -> Vec<DirichletCharacter> {
    let group = UnitGroup::new(q);
    (0..group.size()).map(|i| group.character(i)).collect()
}

/// The non-principal primitive characters modulo `q`.
pub fn primitive_characters(q: u64) -> Vec<DirichletCharacter> {
    character_group(q)
        .into_iter()
        .filter(|c| c.is_primitive() && !c.is_principal())
        .collect()
}

/// Smallest `f | q` such that `χ` is induced by a character modulo `f`.
pub fn conductor(chi: &DirichletCharacter) -> u64 {
    conductor_of(chi.modulus, &chi.exponents)
}

pub fn gauss_sum(chi: &DirichletCharacter) -> GaussSumValue {
    let q = chi.modulus as u128;
    let l = chi.root_order as u128;
    let den = q * l;
    let mut sum = Complex64::new(0.0, 0.0);
    for m in 1..=chi.modulus {
        if let Some(k) = chi.exponents[(m % chi.modulus) as usize] {
            // χ(m) e^{2πim/q} = e^{2πi (k q + m L) / (q L)}
            let num = (k as u128 * q + m as u128 * l) % den;
            sum += root_of_unity(num, den);
        }
    }
    GaussSumValue {
        value: sum,
        modulus: chi.modulus,
    }
}

/// `e^{2πi num/den}` with exact values on quarter turns.
fn root_of_unity(num: u128, den: u128) -> Complex64 {
    let num = num % den;
    if (4 * num) % den == 0 {
        return match 4 * num / den {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    // Reduce to (-1/2, 1/2] turns before scaling by 2π.
    let signed = if 2 * num > den {
        -((den - num) as f64)
    } else {
        num as f64
    };
    Complex64::from_polar(1.0, 2.0 * PI * signed / den as f64)
}

struct UnitGroup {
    modulus: u64,
    components: Vec<CyclicComponent>,
    root_order: u64,
    /// Exponent vector of each residue, `None` for non-units.
    dlog: Vec<Option<Vec<u64>>>,
}

impl UnitGroup {
    fn new(q: u64) -> Self {
        assert!(q >= 1, "modulus must be positive");
        let components = cyclic_components(q);
        let root_order = components.iter().map(|c| c.order).fold(1, lcm);
        let mut dlog = vec![None; q as usize];
        let mut exps = vec![0u64; components.len()];
        loop {
            let mut n = 1 % q;
            for (c, &e) in components.iter().zip(&exps) {
                n = mul_mod(n, pow_mod(c.generator, e, q), q);
            }
            dlog[n as usize] = Some(exps.clone());
            if !advance(&mut exps, &components) {
                break;
            }
        }
        Self {
            modulus: q,
            components,
            root_order,
            dlog,
        }
    }

    fn size(&self) -> usize {
        self.components.iter().map(|c| c.order as usize).product()
    }

    fn character(&self, index: usize) -> DirichletCharacter {
        // Mixed radix, last component fastest.
        let mut rest = index;
        let mut a = vec![0u64; self.components.len()];
        for (slot, c) in a.iter_mut().zip(&self.components).rev() {
            *slot = (rest % c.order as usize) as u64;
            rest /= c.order as usize;
        }
        let l = self.root_order;
        let exponents: Vec<Option<u64>> = self
            .dlog
            .iter()
            .map(|d| {
                d.as_ref().map(|e| {
                    e.iter()
                        .zip(&a)
                        .zip(&self.components)
                        .map(|((&ej, &aj), c)| (ej * aj % c.order) * (l / c.order))
                        .sum::<u64>()
                        % l
                })
            })
            .collect();
        let values = exponents
            .iter()
            .map(|e| match e {
                None => Complex64::new(0.0, 0.0),
                Some(k) => root_of_unity(*k as u128, l as u128),
            })
            .collect();
        let q = self.modulus;
        let minus_one = exponents[((q + q - 1) % q) as usize].expect("-1 is a unit");
        let parity = if minus_one == 0 { 0 } else { 1 };
        let conductor = conductor_of(q, &exponents);
        DirichletCharacter {
            modulus: q,
            index,
            root_order: l,
            exponents,
            values,
            parity,
            conductor,
        }
    }
}

fn advance(exps: &mut [u64], components: &[CyclicComponent]) -> bool {
    for (e, c) in exps.iter_mut().zip(components).rev() {
        *e += 1;
        if *e < c.order {
            return true;
        }
        *e = 0;
    }
    false
}

fn conductor_of(q: u64, exponents: &[Option<u64>]) -> u64 {
    divisors(q)
        .into_iter()
        .find(|&f| {
            (0..q)
                .filter(|&a| a % f == 1 % f)
                .all(|a| matches!(exponents[a as usize], None | Some(0)))
        })
        .unwrap_or(q)
}

fn cyclic_components(q: u64) -> Vec<CyclicComponent> {
    let mut out = Vec::new();
    for (p, k) in factorize(q) {
        let pk = p.pow(k);
        let lift = |g: u64| crt_lift(g, pk, q);
        if p == 2 {
            match k {
                1 => {}
                2 => out.push(CyclicComponent {
                    generator: lift(3),
                    order: 2,
                }),
                _ => {
                    out.push(CyclicComponent {
                        generator: lift(pk - 1),
                        order: 2,
                    });
                    out.push(CyclicComponent {
                        generator: lift(5),
                        order: pk / 4,
                    });
                }
            }
        } else {
            let phi = pk / p * (p - 1);
            let g = smallest_primitive_root(pk, phi);
            out.push(CyclicComponent {
                generator: lift(g),
                order: phi,
            });
        }
    }
    out
}

fn smallest_primitive_root(m: u64, phi: u64) -> u64 {
    let primes: Vec<u64> = factorize(phi).into_iter().map(|(r, _)| r).collect();
    (2..m)
        .find(|&g| gcd(g, m) == 1 && primes.iter().all(|&r| pow_mod(g, phi / r, m) != 1))
        .expect("odd prime powers have primitive roots")
}

/// `x ≡ g (mod m)`, `x ≡ 1 (mod q/m)`.
fn crt_lift(g: u64, m: u64, q: u64) -> u64 {
    let rest = q / m;
    if rest == 1 {
        return g % q;
    }
    // x = g + m·y with m·y ≡ 1 - g (mod rest)
    let inv = mod_inverse(m % rest, rest);
    let target = (1 + rest * m - g % rest) % rest;
    let y = mul_mod(target, inv, rest);
    (g + m * y) % q
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m as i128) as u64
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut d: Vec<u64> = (1..=n).take_while(|i| i * i <= n).filter(|i| n % i == 0).collect();
    let big: Vec<u64> = d.iter().rev().map(|i| n / i).filter(|&j| j * j != n).collect();
    d.extend(big);
    d
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Euler's totient.
pub fn totient(q: u64) -> u64 {
    factorize(q)
        .into_iter()
        .fold(q, |acc, (p, _)| acc / p * (p - 1))
}
