//! Families of subsets of `[k]` as `2^k`-bit characteristic vectors, and the
//! enumeration of maximal intersecting families.
//!
//! A subset `S ⊆ [k]` is a mask with bit `i - 1` set iff `i ∈ S`. A family is
//! a `u128` whose bit `s` is set iff the subset with mask `s` belongs to it,
//! which caps the ground set at [`K_MAX`] = 7.
//!
//! Maximal intersecting families are exactly the up-closed families holding
//! one set out of every complementary pair `{S, [k] \ S}`. The enumerator
//! walks the complementary pairs in a fixed order and decides which side
//! joins; each decision pulls in the chosen set's up-set, and the branch dies
//! as soon as some set and its complement are both in.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest ground set a [`SetFamily`] can hold.
pub const K_MAX: u8 = 7;

/// λ(k) for k = 8, 9, transcribed from the published enumeration. Served only
/// when the literature table is switched on.
pub const LITERATURE_LAMBDA: [(u8, u128); 2] =
    [(8, 229_809_982_112), (9, 423_295_099_074_735_261_880)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    Computed,
    Literature,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Computed => "computed",
            Provenance::Literature => "literature",
        })
    }
}

/// Capacity settings shared by the counting and σ routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest k enumerated from scratch; never above [`K_MAX`].
    pub k_max: u8,
    /// Serve λ(8), λ(9) from [`LITERATURE_LAMBDA`].
    pub literature_table: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            k_max: K_MAX,
            literature_table: false,
        }
    }
}

impl Limits {
    pub const ENV_KMAX: &'static str = "ORCOV_KMAX";

    /// Default limits with `k_max` taken from `ORCOV_KMAX` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(Self::ENV_KMAX) {
            let k: u8 = raw.trim().parse().map_err(|_| {
                Error::Domain(format!("{}={raw:?} is not a small integer", Self::ENV_KMAX))
            })?;
            if k == 0 || k > K_MAX {
                return Err(Error::Capacity(format!(
                    "{}={k} outside 1..={K_MAX}",
                    Self::ENV_KMAX
                )));
            }
            limits.k_max = k;
        }
        Ok(limits)
    }

    pub fn with_literature_table(mut self, on: bool) -> Self {
        self.literature_table = on;
        self
    }

    /// Largest k for which λ(k) is available under these limits.
    pub fn lambda_ceiling(&self) -> u8 {
        if self.literature_table {
            LITERATURE_LAMBDA[LITERATURE_LAMBDA.len() - 1].0
        } else {
            self.k_max.min(K_MAX)
        }
    }

    pub fn check_enumerable(&self, k: u8) -> Result<()> {
        check_ground(k)?;
        let cap = self.k_max.min(K_MAX);
        if k > cap {
            return Err(Error::Capacity(format!(
                "k = {k} exceeds the enumeration bound k_max = {cap}"
            )));
        }
        Ok(())
    }
}

fn check_ground(k: u8) -> Result<()> {
    if k == 0 {
        return Err(Error::Domain("ground set [k] needs k >= 1".into()));
    }
    if k > K_MAX {
        return Err(Error::Capacity(format!("k = {k} exceeds k_max = {K_MAX}")));
    }
    Ok(())
}

/// A subset of `[k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask {
    k: u8,
    bits: u8,
}

impl SubsetMask {
    pub fn new(k: u8, bits: u8) -> Result<Self> {
        check_ground(k)?;
        if u32::from(bits) >= 1 << k {
            return Err(Error::Domain(format!("mask {bits:#b} does not fit [{k}]")));
        }
        Ok(SubsetMask { k, bits })
    }

    /// Subset from 1-based elements.
    pub fn from_elements(k: u8, elems: &[u8]) -> Result<Self> {
        let mut bits = 0u8;
        for &i in elems {
            if i == 0 || i > k {
                return Err(Error::Domain(format!("element {i} not in [{k}]")));
            }
            bits |= 1 << (i - 1);
        }
        SubsetMask::new(k, bits)
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn bits(&self) -> u8 {
        self.bits
    }

    pub fn complement(&self) -> Self {
        SubsetMask {
            k: self.k,
            bits: self.bits ^ full_mask(self.k),
        }
    }

    pub fn is_disjoint(&self, other: &SubsetMask) -> bool {
        self.bits & other.bits == 0
    }

    pub fn contains(&self, i: u8) -> bool {
        i >= 1 && i <= self.k && self.bits >> (i - 1) & 1 == 1
    }

    /// Elements in ascending order, 1-based.
    pub fn elements(&self) -> impl Iterator<Item = u8> + '_ {
        (1..=self.k).filter(|&i| self.contains(i))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elems: Vec<String> = self.elements().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", elems.join(","))
    }
}

fn full_mask(k: u8) -> u8 {
    ((1u16 << k) - 1) as u8
}

fn width(k: u8) -> u32 {
    1 << k
}

fn universe_bits(k: u8) -> u128 {
    if width(k) == 128 {
        u128::MAX
    } else {
        (1u128 << width(k)) - 1
    }
}

/// Up-set and down-set of every subset of `[k]`, as family vectors.
struct Lattice {
    up: Vec<u128>,
    down: Vec<u128>,
}

fn lattice(k: u8) -> &'static Lattice {
    static TABLES: [OnceLock<Lattice>; K_MAX as usize + 1] =
        [const { OnceLock::new() }; K_MAX as usize + 1];
    TABLES[k as usize].get_or_init(|| {
        let n = width(k) as usize;
        let vector = |keep: &dyn Fn(usize) -> bool| {
            (0..n)
                .filter(|&t| keep(t))
                .fold(0u128, |acc, t| acc | 1 << t)
        };
        let up = (0..n).map(|s| vector(&|t| s & t == s)).collect();
        let down = (0..n).map(|s| vector(&|t| s & t == t)).collect();
        Lattice { up, down }
    })
}

/// Maps bit `s` to bit `full ^ s`, i.e. every member to its complement.
fn mirror(k: u8, member: u128) -> u128 {
    member.reverse_bits() >> (128 - width(k))
}

/// A family of subsets of `[k]`. Ordered by the member vector, which is the
/// canonical catalog order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetFamily {
    k: u8,
    member: u128,
}

impl SetFamily {
    pub fn empty(k: u8) -> Result<Self> {
        check_ground(k)?;
        Ok(SetFamily { k, member: 0 })
    }

    pub fn power_set(k: u8) -> Result<Self> {
        check_ground(k)?;
        Ok(SetFamily {
            k,
            member: universe_bits(k),
        })
    }

    pub fn from_member_bits(k: u8, member: u128) -> Result<Self> {
        check_ground(k)?;
        if member & !universe_bits(k) != 0 {
            return Err(Error::Domain(format!(
                "member vector wider than 2^{k} bits"
            )));
        }
        Ok(SetFamily { k, member })
    }

    pub fn from_masks<I: IntoIterator<Item = u8>>(k: u8, masks: I) -> Result<Self> {
        let mut f = SetFamily::empty(k)?;
        for m in masks {
            f.insert(SubsetMask::new(k, m)?);
        }
        Ok(f)
    }

    /// `{S ⊆ [k] : i ∈ S}`.
    pub fn star(k: u8, i: u8) -> Result<Self> {
        let s = SubsetMask::from_elements(k, &[i])?;
        Ok(SetFamily {
            k,
            member: lattice(k).up[s.bits as usize],
        })
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn member_bits(&self) -> u128 {
        self.member
    }

    pub fn len(&self) -> u32 {
        self.member.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.member == 0
    }

    pub fn contains(&self, s: SubsetMask) -> bool {
        s.k == self.k && self.member >> s.bits & 1 == 1
    }

    pub fn insert(&mut self, s: SubsetMask) {
        assert_eq!(s.k, self.k, "subset and family over different ground sets");
        self.member |= 1 << s.bits;
    }

    /// Members in ascending mask order.
    pub fn members(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        let k = self.k;
        (0..width(k))
            .filter(move |&s| self.member >> s & 1 == 1)
            .map(move |s| SubsetMask { k, bits: s as u8 })
    }

    /// Every two members, a member with itself included, meet.
    pub fn is_intersecting(&self) -> bool {
        let down = &lattice(self.k).down;
        let full = full_mask(self.k) as usize;
        self.members()
            .all(|s| self.member & down[full ^ s.bits as usize] == 0)
    }

    pub fn is_maximal_intersecting(&self) -> bool {
        self.len() == width(self.k) / 2 && self.is_intersecting()
    }

    pub fn is_up_closed(&self) -> bool {
        let up = &lattice(self.k).up;
        self.members()
            .all(|s| up[s.bits as usize] & !self.member == 0)
    }

    pub fn upward_closure(&self) -> SetFamily {
        let up = &lattice(self.k).up;
        let member = self
            .members()
            .fold(self.member, |acc, s| acc | up[s.bits as usize]);
        SetFamily { k: self.k, member }
    }

    /// Grows an intersecting family to a maximal one: up-close, then add the
    /// smallest-mask set meeting every member, until none is left.
    pub fn extend_to_maximal(&self) -> Result<SetFamily> {
        if !self.is_intersecting() {
            return Err(Error::Domain("family is not intersecting".into()));
        }
        let lat = lattice(self.k);
        let full = full_mask(self.k) as usize;
        let mut f = self.upward_closure();
        loop {
            let next = (1..width(self.k) as usize)
                .find(|&s| f.member >> s & 1 == 0 && f.member & lat.down[full ^ s] == 0);
            match next {
                Some(s) => f.member |= lat.up[s],
                None => break,
            }
        }
        debug_assert!(f.is_maximal_intersecting());
        Ok(f)
    }

    /// Image of the family under a permutation of `[k]` given 0-based:
    /// element `i + 1` goes to `perm[i] + 1`.
    pub fn permute(&self, perm: &[u8]) -> SetFamily {
        assert_eq!(perm.len(), self.k as usize);
        let member = self.members().fold(0u128, |acc, s| {
            let img = (0..self.k)
                .filter(|&i| s.bits >> i & 1 == 1)
                .fold(0u8, |m, i| m | 1 << perm[i as usize]);
            acc | 1 << img
        });
        SetFamily { k: self.k, member }
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.members().try_for_each(|s| write!(f, "{s}"))
    }
}

/// Order in which the enumerator visits complementary pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PairOrder {
    /// By (size of the smaller side, its mask), ascending.
    #[default]
    Ascending,
    Reversed,
}

/// Each complementary pair `{S, S^c}` once, by its representative: the side
/// with fewer elements, or the smaller mask if both have `k/2`.
fn complementary_pairs(k: u8, order: PairOrder) -> Vec<(u8, u8)> {
    let full = full_mask(k);
    let key = |s: u8| (s.count_ones(), s);
    let mut pairs: Vec<(u8, u8)> = (0..=full)
        .filter(|&s| key(s) < key(full ^ s))
        .map(|s| (s, full ^ s))
        .collect();
    pairs.sort_by_key(|&(s, _)| key(s));
    if order == PairOrder::Reversed {
        pairs.reverse();
    }
    pairs
}

struct Enumerator<'a, F> {
    k: u8,
    up: &'a [u128],
    pairs: Vec<(u8, u8)>,
    visit: F,
}

impl<F: FnMut(u128)> Enumerator<'_, F> {
    fn dfs(&mut self, from: usize, included: u128) {
        let excluded = mirror(self.k, included);
        let decided = included | excluded;
        let Some(pos) = (from..self.pairs.len()).find(|&p| decided >> self.pairs[p].0 & 1 == 0)
        else {
            (self.visit)(included);
            return;
        };
        let (s, t) = self.pairs[pos];
        for side in [s, t] {
            let next = included | self.up[side as usize];
            if next & mirror(self.k, next) == 0 {
                self.dfs(pos + 1, next);
            }
        }
    }
}

/// Calls `visit` on every maximal intersecting family over `[k]`, in search
/// order (not canonical order).
pub fn for_each_mif<F: FnMut(SetFamily)>(k: u8, order: PairOrder, mut visit: F) -> Result<()> {
    check_ground(k)?;
    let mut e = Enumerator {
        k,
        up: &lattice(k).up,
        pairs: complementary_pairs(k, order),
        visit: |member| visit(SetFamily { k, member }),
    };
    e.dfs(0, 0);
    Ok(())
}

/// All maximal intersecting families over `[k]`, canonically ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MifCatalog {
    k: u8,
    families: Vec<SetFamily>,
}

impl MifCatalog {
    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn families(&self) -> &[SetFamily] {
        &self.families
    }

    pub fn count(&self) -> usize {
        self.families.len()
    }

    pub fn index_of(&self, f: &SetFamily) -> Option<usize> {
        self.families.binary_search(f).ok()
    }
}

pub fn enumerate_mifs(k: u8) -> Result<MifCatalog> {
    enumerate_mifs_ordered(k, PairOrder::Ascending)
}

pub fn enumerate_mifs_ordered(k: u8, order: PairOrder) -> Result<MifCatalog> {
    let mut families = Vec::new();
    for_each_mif(k, order, |f| families.push(f))?;
    families.sort_unstable();
    Ok(MifCatalog { k, families })
}

/// Process-wide memoised catalog.
pub fn catalog(k: u8) -> Result<&'static MifCatalog> {
    static CATALOGS: [OnceLock<MifCatalog>; K_MAX as usize + 1] =
        [const { OnceLock::new() }; K_MAX as usize + 1];
    check_ground(k)?;
    Ok(CATALOGS[k as usize].get_or_init(|| enumerate_mifs(k).expect("k checked")))
}

pub fn count_mifs(k: u8, order: PairOrder) -> Result<u64> {
    let mut n = 0u64;
    for_each_mif(k, order, |_| n += 1)?;
    Ok(n)
}

/// λ(k) with where it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lambda {
    pub k: u8,
    pub value: u128,
    pub provenance: Provenance,
}

fn computed_lambda(k: u8) -> u128 {
    static MEMO: [OnceLock<u128>; K_MAX as usize + 1] =
        [const { OnceLock::new() }; K_MAX as usize + 1];
    *MEMO[k as usize]
        .get_or_init(|| u128::from(count_mifs(k, PairOrder::Ascending).expect("k checked")))
}

/// The number of maximal intersecting families over `[k]`.
pub fn hosten_morris(k: u8, limits: &Limits) -> Result<Lambda> {
    if k == 0 {
        return Err(Error::Domain("λ(k) needs k >= 1".into()));
    }
    if k <= limits.k_max.min(K_MAX) {
        return Ok(Lambda {
            k,
            value: computed_lambda(k),
            provenance: Provenance::Computed,
        });
    }
    if limits.literature_table {
        if let Some(&(_, value)) = LITERATURE_LAMBDA.iter().find(|&&(kk, _)| kk == k) {
            return Ok(Lambda {
                k,
                value,
                provenance: Provenance::Literature,
            });
        }
    }
    Err(Error::Capacity(format!(
        "λ({k}) unavailable: computed up to k = {}{}",
        limits.k_max.min(K_MAX),
        if limits.literature_table {
            ", literature table up to k = 9".to_string()
        } else {
            "; pass the literature table flag for k = 8, 9".to_string()
        }
    )))
}

/// Sets `S ∈ f1`, `T ∈ f2` with `S ∩ T = ∅` for two distinct maximal
/// intersecting families: `S` is the smallest member of `f1 \ f2`, `T` its
/// complement.
pub fn find_disjoint_pair(f1: &SetFamily, f2: &SetFamily) -> Result<(SubsetMask, SubsetMask)> {
    if f1.k != f2.k {
        return Err(Error::Domain("families over different ground sets".into()));
    }
    if !f1.is_maximal_intersecting() || !f2.is_maximal_intersecting() {
        return Err(Error::Domain(
            "both families must be maximal intersecting".into(),
        ));
    }
    let diff = f1.member & !f2.member;
    if diff == 0 {
        return Err(Error::Domain("families are identical".into()));
    }
    let s = SubsetMask {
        k: f1.k,
        bits: diff.trailing_zeros() as u8,
    };
    let t = s.complement();
    debug_assert!(f2.contains(t));
    Ok((s, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(k: u8, sets: &[&[u8]]) -> SetFamily {
        let mut f = SetFamily::empty(k).unwrap();
        for s in sets {
            f.insert(SubsetMask::from_elements(k, s).unwrap());
        }
        f
    }

    #[test]
    fn intersecting_examples() {
        assert!(!fam(2, &[&[]]).is_intersecting());
        assert!(SetFamily::star(3, 1).unwrap().is_intersecting());
        assert!(!fam(2, &[&[1], &[2]]).is_intersecting());
        assert!(SetFamily::empty(3).unwrap().is_intersecting());
    }

    #[test]
    fn maximal_examples() {
        assert!(fam(2, &[&[1], &[1, 2]]).is_maximal_intersecting());
        assert!(!fam(2, &[&[1, 2]]).is_maximal_intersecting());
        let majority = fam(3, &[&[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]]);
        assert!(majority.is_maximal_intersecting());
    }

    #[test]
    fn upward_closure_examples() {
        assert_eq!(fam(2, &[&[1]]).upward_closure(), fam(2, &[&[1], &[1, 2]]));
        let p = SetFamily::power_set(3).unwrap();
        assert_eq!(p.upward_closure(), p);
        assert_eq!(
            fam(3, &[&[1, 2]]).upward_closure(),
            fam(3, &[&[1, 2], &[1, 2, 3]])
        );
    }

    #[test]
    fn extend_examples() {
        assert_eq!(
            fam(2, &[&[1]]).extend_to_maximal().unwrap(),
            fam(2, &[&[1], &[1, 2]])
        );
        assert_eq!(
            SetFamily::empty(1).unwrap().extend_to_maximal().unwrap(),
            fam(1, &[&[1]])
        );
        let e = fam(3, &[&[1, 2]]).extend_to_maximal().unwrap();
        assert_eq!(e.len(), 4);
        assert!(e.contains(SubsetMask::from_elements(3, &[1, 2]).unwrap()));
        assert!(e.is_maximal_intersecting());
        assert!(matches!(
            fam(2, &[&[1], &[2]]).extend_to_maximal(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn small_catalogs() {
        let c1 = enumerate_mifs(1).unwrap();
        assert_eq!(c1.families(), &[fam(1, &[&[1]])]);
        let c2 = enumerate_mifs(2).unwrap();
        let mut want = [fam(2, &[&[1], &[1, 2]]), fam(2, &[&[2], &[1, 2]])];
        want.sort();
        assert_eq!(c2.families(), &want[..]);
        let c3 = enumerate_mifs(3).unwrap();
        let mut want: Vec<_> = (1..=3).map(|i| SetFamily::star(3, i).unwrap()).collect();
        want.push(fam(3, &[&[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]]));
        want.sort();
        assert_eq!(c3.families(), &want[..]);
    }

    #[test]
    fn lambda_values_and_capacity() {
        let lim = Limits::default();
        let got: Vec<u128> = (1..=6)
            .map(|k| hosten_morris(k, &lim).unwrap().value)
            .collect();
        assert_eq!(got, [1, 2, 4, 12, 81, 2646]);
        assert!(matches!(hosten_morris(8, &lim), Err(Error::Capacity(_))));
        let lit = lim.with_literature_table(true);
        let l9 = hosten_morris(9, &lit).unwrap();
        assert_eq!(l9.provenance, Provenance::Literature);
        assert!(l9.value > 4 * 10u128.pow(20) && l9.value < 5 * 10u128.pow(20));
        assert!(matches!(hosten_morris(10, &lit), Err(Error::Capacity(_))));
        let low = Limits {
            k_max: 3,
            literature_table: false,
        };
        assert!(hosten_morris(4, &low).is_err());
        assert!(low.check_enumerable(4).is_err());
    }

    #[test]
    fn reversed_order_agrees() {
        for k in 1..=5 {
            assert_eq!(
                enumerate_mifs(k).unwrap(),
                enumerate_mifs_ordered(k, PairOrder::Reversed).unwrap()
            );
        }
    }

    #[test]
    fn disjoint_pair_examples() {
        let a = fam(2, &[&[1], &[1, 2]]);
        let b = fam(2, &[&[2], &[1, 2]]);
        let (s, t) = find_disjoint_pair(&a, &b).unwrap();
        assert_eq!((s.to_string(), t.to_string()), ("{1}".into(), "{2}".into()));
        let s1 = SetFamily::star(3, 1).unwrap();
        let s2 = SetFamily::star(3, 2).unwrap();
        let (s, t) = find_disjoint_pair(&s1, &s2).unwrap();
        assert!(s.contains(1) && t.contains(2) && s.is_disjoint(&t));
        assert!(s1.contains(s) && s2.contains(t));
        assert!(find_disjoint_pair(&a, &a).is_err());
        assert!(find_disjoint_pair(&fam(2, &[&[1]]), &b).is_err());
    }

    #[test]
    fn display_format() {
        assert_eq!(fam(2, &[&[1], &[1, 2]]).to_string(), "{1}{1,2}");
        assert_eq!(fam(2, &[&[]]).to_string(), "{}");
    }

    #[test]
    fn mirror_is_complement_map() {
        for k in 1..=K_MAX {
            let full = full_mask(k);
            for s in 0..=full {
                assert_eq!(mirror(k, 1u128 << s), 1u128 << (full ^ s));
            }
        }
    }
}
