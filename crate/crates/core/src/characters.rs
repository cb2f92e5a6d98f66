//! Dirichlet characters modulo `N`.
//!
//! The unit group is split by CRT into cyclic factors, one per odd prime power
//! and up to two for the power of two (`⟨−1⟩` and `⟨5⟩`). A character is its
//! exponent vector on those generators. Enumeration is lexicographic in the
//! exponents, so index 0 is always the principal character.
//!
//! Discrete logarithms are tabulated once per modulus by exhaustive powering and
//! shared between all characters of that modulus.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::exactnum::rational::{divisors, euler_phi, factorize, gcd_u64, int, lcm_u64};
use crate::exactnum::{CycNum, CycSum};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroupStructure {
    pub modulus: u64,
    pub generators: Vec<u64>,
    pub orders: Vec<u64>,
}

impl UnitGroupStructure {
    /// Group exponent, the lcm of the generator orders.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &o| lcm_u64(acc, o))
    }

    pub fn size(&self) -> u64 {
        self.orders.iter().product()
    }
}

fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    let (mut b, mut acc) = (base as u128 % m as u128, 1u128 % m as u128);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        e >>= 1;
    }
    acc as u64
}

fn mult_order(g: u64, m: u64) -> u64 {
    let phi = euler_phi(m);
    let mut order = phi;
    for (p, _) in factorize(phi) {
        while order.is_multiple_of(p) && pow_mod(g, order / p, m) == 1 {
            order /= p;
        }
    }
    order
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(m as i128) as u64
}

/// The residue mod `n` that is `g` mod `q` and `1` mod `n/q`.
fn crt_lift(g: u64, q: u64, n: u64) -> u64 {
    let rest = n / q;
    if rest == 1 {
        return g % q;
    }
    // x = 1 + rest·k with rest·k ≡ g − 1 (mod q)
    let k = ((g + q - 1) % q) as u128 * mod_inverse(rest % q, q) as u128 % q as u128;
    ((1 + rest as u128 * k) % n as u128) as u64
}

/// CRT decomposition of `(Z/NZ)^×` into cyclic factors.
pub fn unit_group_structure(modulus: u64) -> UnitGroupStructure {
    assert!(modulus >= 1, "modulus must be positive");
    let mut local: Vec<(u64, u64, u64)> = Vec::new(); // (generator mod q, order, q)
    for (p, k) in factorize(modulus) {
        let q = p.pow(k);
        if p == 2 {
            if k >= 2 {
                local.push((q - 1, 2, q));
            }
            if k >= 3 {
                local.push((5, q / 4, q));
            }
        } else {
            let phi = euler_phi(q);
            let g = (2..q)
                .find(|&g| gcd_u64(g, q) == 1 && mult_order(g, q) == phi)
                .expect("odd prime powers are cyclic");
            local.push((g, phi, q));
        }
    }
    let (generators, orders) = local
        .into_iter()
        .map(|(g, ord, q)| (crt_lift(g, q, modulus), ord))
        .unzip();
    UnitGroupStructure {
        modulus,
        generators,
        orders,
    }
}

/// Discrete-log table for one modulus.
#[derive(Debug)]
pub struct CharacterGroup {
    structure: UnitGroupStructure,
    exponent: u64,
    /// `logs[m]` holds the generator exponents of the unit `m`, `None` off units.
    logs: Vec<Option<Vec<u64>>>,
}

impl CharacterGroup {
    fn build(modulus: u64) -> Self {
        let structure = unit_group_structure(modulus);
        let mut logs = vec![None; modulus as usize];
        let mut tuple = vec![0u64; structure.orders.len()];
        loop {
            let value =
                structure
                    .generators
                    .iter()
                    .zip(&tuple)
                    .fold(1 % modulus, |acc, (&g, &e)| {
                        (acc as u128 * pow_mod(g, e, modulus) as u128 % modulus as u128) as u64
                    });
            logs[value as usize] = Some(tuple.clone());
            if !increment(&mut tuple, &structure.orders) {
                break;
            }
        }
        if modulus == 1 {
            logs[0] = Some(Vec::new());
        }
        let exponent = structure.exponent();
        CharacterGroup {
            structure,
            exponent,
            logs,
        }
    }

    /// Shared table for `modulus`, built on first use.
    pub fn get(modulus: u64) -> Arc<CharacterGroup> {
        static CACHE: OnceLock<RwLock<HashMap<u64, Arc<CharacterGroup>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache.read().unwrap().get(&modulus) {
            return g.clone();
        }
        let group = Arc::new(CharacterGroup::build(modulus));
        cache
            .write()
            .unwrap()
            .entry(modulus)
            .or_insert(group)
            .clone()
    }

    pub fn structure(&self) -> &UnitGroupStructure {
        &self.structure
    }

    pub fn modulus(&self) -> u64 {
        self.structure.modulus
    }

    pub fn discrete_log(&self, m: i64) -> Option<&[u64]> {
        let r = m.rem_euclid(self.modulus() as i64) as usize;
        self.logs[r].as_deref()
    }
}

/// Odometer step over `0..bounds[i]`, last coordinate fastest; `false` after wrapping.
fn increment(tuple: &mut [u64], bounds: &[u64]) -> bool {
    for i in (0..tuple.len()).rev() {
        tuple[i] += 1;
        if tuple[i] < bounds[i] {
            return true;
        }
        tuple[i] = 0;
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// `χ(−1)` for a character of this parity.
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    /// Parity matching the integer `n`.
    pub fn of_integer(n: i64) -> Parity {
        if n.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone)]
pub struct DirichletCharacter {
    group: Arc<CharacterGroup>,
    exponents: Vec<u64>,
    order: u64,
    parity: Parity,
}

impl fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DirichletCharacter")
            .field("modulus", &self.modulus())
            .field("exponents", &self.exponents)
            .field("order", &self.order)
            .field("parity", &self.parity)
            .finish()
    }
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.exponents == other.exponents
    }
}

impl Eq for DirichletCharacter {}

impl DirichletCharacter {
    /// The character with the given exponents on the generators of `modulus`.
    pub fn from_exponents(modulus: u64, exponents: &[u64]) -> Option<Self> {
        let group = CharacterGroup::get(modulus);
        let orders = &group.structure.orders;
        if exponents.len() != orders.len() {
            return None;
        }
        let exponents: Vec<u64> = exponents.iter().zip(orders).map(|(e, o)| e % o).collect();
        let order = exponents
            .iter()
            .zip(orders)
            .fold(1, |acc, (&e, &o)| lcm_u64(acc, o / gcd_u64(e, o)));
        let mut chi = DirichletCharacter {
            group,
            exponents,
            order,
            parity: Parity::Even,
        };
        if 2 * chi.exponent_at(-1).expect("−1 is a unit") == order {
            chi.parity = Parity::Odd;
        }
        Some(chi)
    }

    pub fn principal(modulus: u64) -> Self {
        let n = CharacterGroup::get(modulus).structure.orders.len();
        Self::from_exponents(modulus, &vec![0; n]).expect("length matches")
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn generators(&self) -> &[u64] {
        &self.group.structure.generators
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    /// `j` with `χ(m) = ζ_r^j`, `r = order`; `None` when `gcd(m, N) > 1`.
    pub fn exponent_at(&self, m: i64) -> Option<u64> {
        let logs = self.group.discrete_log(m)?;
        let big = self.group.exponent;
        let k = logs
            .iter()
            .zip(&self.exponents)
            .zip(&self.group.structure.orders)
            .fold(0u128, |acc, ((&l, &e), &o)| {
                (acc + l as u128 * e as u128 * (big / o) as u128) % big as u128
            }) as u64;
        Some(k / (big / self.order))
    }

    /// Complex conjugate character.
    pub fn conj(&self) -> DirichletCharacter {
        let exps: Vec<u64> = self
            .exponents
            .iter()
            .zip(&self.group.structure.orders)
            .map(|(&e, &o)| (o - e) % o)
            .collect();
        DirichletCharacter::from_exponents(self.modulus(), &exps).expect("length matches")
    }

    /// Smallest `f | N` such that `χ` is trivial on units `≡ 1 (mod f)`.
    pub fn conductor(&self) -> u64 {
        let n = self.modulus();
        divisors(n)
            .into_iter()
            .find(|&f| {
                (1..=n)
                    .step_by(f as usize)
                    .all(|m| self.exponent_at(m as i64).is_none_or(|j| j == 0))
            })
            .expect("N itself qualifies")
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus()
    }
}

/// All `φ(N)` characters, lexicographic on exponents.
pub fn characters(modulus: u64) -> Vec<DirichletCharacter> {
    let group = CharacterGroup::get(modulus);
    let orders = group.structure.orders.clone();
    let mut tuple = vec![0u64; orders.len()];
    let mut out = Vec::new();
    loop {
        out.push(DirichletCharacter::from_exponents(modulus, &tuple).expect("length matches"));
        if !increment(&mut tuple, &orders) {
            break;
        }
    }
    out
}

/// The character at position `index` of [`characters`].
pub fn character_by_index(modulus: u64, index: usize) -> Option<DirichletCharacter> {
    let orders = CharacterGroup::get(modulus).structure.orders.clone();
    let total: u64 = orders.iter().product();
    if index as u64 >= total {
        return None;
    }
    let mut rest = index as u64;
    let mut exps = vec![0u64; orders.len()];
    for i in (0..orders.len()).rev() {
        exps[i] = rest % orders[i];
        rest /= orders[i];
    }
    DirichletCharacter::from_exponents(modulus, &exps)
}

/// `χ(m)` in `Q(ζ_r)`, zero off units.
pub fn char_eval(chi: &DirichletCharacter, m: i64) -> CycNum {
    match chi.exponent_at(m) {
        Some(j) => CycNum::root_of_unity(chi.order(), j as i64),
        None => CycNum::zero(chi.order()),
    }
}

/// `G(χ) = Σ_{a=1}^{N} χ(a) ζ_N^a` in `Q(ζ_{lcm(N, r)})`.
///
/// For primitive `χ`, `G(χ)·G(χ̄) = χ(−1)·N`.
pub fn gauss_sum(chi: &DirichletCharacter) -> CycNum {
    let g = raw_gauss_sum(chi);
    debug_assert!(
        !chi.is_primitive()
            || &g * &raw_gauss_sum(&chi.conj())
                == CycNum::from_rational(int(chi.parity().sign() * chi.modulus() as i64), 1)
    );
    g
}

fn raw_gauss_sum(chi: &DirichletCharacter) -> CycNum {
    let n = chi.modulus();
    let r = chi.order();
    let big = lcm_u64(n, r);
    let mut sum = CycSum::new(big);
    for a in 1..=n as i64 {
        if let Some(j) = chi.exponent_at(a) {
            sum.add_root(j as i64 * (big / r) as i64 + a * (big / n) as i64, &int(1));
        }
    }
    sum.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi4() -> DirichletCharacter {
        character_by_index(4, 1).unwrap()
    }

    #[test]
    fn structures() {
        let s4 = unit_group_structure(4);
        assert_eq!(
            (s4.generators.clone(), s4.orders.clone()),
            (vec![3], vec![2])
        );
        let s8 = unit_group_structure(8);
        assert_eq!(s8.generators, vec![7, 5]);
        assert_eq!(s8.orders, vec![2, 2]);
        let s15 = unit_group_structure(15);
        let mut orders = s15.orders.clone();
        orders.sort();
        assert_eq!(orders, vec![2, 4]);
        for n in 1..=60u64 {
            let s = unit_group_structure(n);
            assert_eq!(s.size(), euler_phi(n), "N={n}");
            for (&g, &o) in s.generators.iter().zip(&s.orders) {
                assert_eq!(mult_order(g, n), o, "N={n} g={g}");
            }
        }
        assert!(unit_group_structure(1).generators.is_empty());
        assert!(unit_group_structure(2).generators.is_empty());
    }

    #[test]
    fn enumeration() {
        let c4 = characters(4);
        assert_eq!(c4.len(), 2);
        assert!(c4[0].is_principal());
        assert_eq!(c4[0].parity(), Parity::Even);
        assert_eq!(c4[1].parity(), Parity::Odd);
        let c3 = characters(3);
        assert_eq!(c3.len(), 2);
        assert_ne!(c3[0].parity(), c3[1].parity());
        assert_eq!(characters(15).len(), 8);
        assert_eq!(characters(1).len(), 1);
        assert_eq!(characters(2).len(), 1);
        for (i, chi) in characters(24).into_iter().enumerate() {
            assert_eq!(character_by_index(24, i).unwrap(), chi);
        }
        assert!(character_by_index(24, 8).is_none());
    }

    #[test]
    fn evaluation() {
        assert_eq!(char_eval(&chi4(), 3), CycNum::from_rational(int(-1), 1));
        assert_eq!(char_eval(&chi4(), 2), CycNum::zero(1));
        for n in 1..=20 {
            for chi in characters(n) {
                assert_eq!(char_eval(&chi, 1), CycNum::one(1));
            }
        }
    }

    #[test]
    fn conductors() {
        assert_eq!(DirichletCharacter::principal(6).conductor(), 1);
        assert!(!DirichletCharacter::principal(6).is_primitive());
        assert_eq!(chi4().conductor(), 4);
        assert!(chi4().is_primitive());
        let induced = characters(8)
            .into_iter()
            .find(|c| (1..8).all(|m| char_eval(c, m) == char_eval(&chi4(), m)))
            .unwrap();
        assert_eq!(induced.conductor(), 4);
        assert!(!induced.is_primitive());
        assert!(DirichletCharacter::principal(1).is_primitive());
        let primitive_counts: Vec<usize> = (1..=12)
            .map(|n| characters(n).iter().filter(|c| c.is_primitive()).count())
            .collect();
        // number of primitive characters mod N, by Möbius inversion of φ
        assert_eq!(primitive_counts, vec![1, 0, 1, 1, 3, 0, 5, 2, 4, 0, 9, 1]);
    }

    #[test]
    fn gauss_sums() {
        assert_eq!(
            gauss_sum(&chi4()),
            CycNum::root_of_unity(4, 1).scale(&int(2))
        );
        assert_eq!(gauss_sum(&DirichletCharacter::principal(1)), CycNum::one(1));
        let quad3 = characters(3)
            .into_iter()
            .find(|c| !c.is_principal())
            .unwrap();
        let g = gauss_sum(&quad3);
        assert_eq!(&g * &g, CycNum::from_rational(int(-3), 1));
    }
}
