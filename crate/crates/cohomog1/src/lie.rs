//! Compact connected Lie group types and their classical invariant data.
//!
//! A [`CompactGroupType`] is a multiset of simple factors plus a torus rank,
//! written as a literal like `"A2+T1"`, `"C1xC1"`, `"B2"` or `"T2"` (`+` and
//! `x` both separate factors). The attached data — invariant degrees, rank,
//! dimension, Weyl group order — drives every series and Euler-characteristic
//! computation in this crate.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Guard against pathological literals like `A4000000000`; classical ranks in
/// practice stay in single or double digits.
const MAX_RANK_PARAM: u32 = 10_000;

/// The classical simple families. `E`, `F`, `G` exist only at their
/// exceptional ranks (6/7/8, 4, 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("group literal parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{family}{rank} is not a legal simple type")]
    IllegalRank { family: char, rank: u32 },
    #[error("rank parameter {0} exceeds the supported bound {MAX_RANK_PARAM}")]
    RankTooLarge(u32),
}

/// One simple factor, e.g. `B2` or `E7`.
///
/// Low-rank coincidences are accepted and treated purely as data: `B1` and
/// `C1` carry the `A1` invariants (degrees `{2}`, dimension 3), `D2` carries
/// the `A1+A1` multiset `{2,2}`, and `D3` carries the `A3` data `{2,3,4}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: u32,
}

impl SimpleType {
    pub fn new(family: Family, rank: u32) -> Result<Self, LieError> {
        let legal = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !legal {
            return Err(LieError::IllegalRank {
                family: family.letter(),
                rank,
            });
        }
        if rank > MAX_RANK_PARAM {
            return Err(LieError::RankTooLarge(rank));
        }
        Ok(SimpleType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Degrees of the basic Weyl-invariant polynomials (Chevalley degrees),
    /// ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds = match (self.family, self.rank) {
            (Family::A, n) => (2..=n + 1).collect(),
            (Family::B, n) | (Family::C, n) => (1..=n).map(|i| 2 * i).collect(),
            (Family::D, n) => (1..n).map(|i| 2 * i).chain([n]).collect::<Vec<_>>(),
            (Family::E, 6) => vec![2, 5, 6, 8, 9, 12],
            (Family::E, 7) => vec![2, 6, 8, 10, 12, 14, 18],
            (Family::E, 8) => vec![2, 8, 12, 14, 18, 20, 24, 30],
            (Family::F, _) => vec![2, 6, 8, 12],
            (Family::G, _) => vec![2, 6],
            _ => unreachable!("constructor enforces legal ranks"),
        };
        ds.sort_unstable();
        ds
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// `rank + number of roots`, where the root count is `2·Σ(dᵢ − 1)`.
    pub fn dimension(&self) -> u64 {
        u64::from(self.rank)
            + 2 * self
                .degrees()
                .iter()
                .map(|&d| u64::from(d) - 1)
                .sum::<u64>()
    }

    /// Order of the Weyl group: the product of the degrees.
    pub fn weyl_order(&self) -> BigUint {
        self.degrees().iter().map(|&d| BigUint::from(d)).product()
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A compact connected group type: simple factors (a sorted multiset) plus a
/// torus rank. The trivial group is `T0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompactGroupType {
    simple: Vec<SimpleType>,
    torus_rank: u32,
}

impl CompactGroupType {
    pub fn new(mut simple: Vec<SimpleType>, torus_rank: u32) -> Self {
        simple.sort_unstable();
        CompactGroupType { simple, torus_rank }
    }

    pub fn trivial() -> Self {
        CompactGroupType::new(Vec::new(), 0)
    }

    pub fn torus(rank: u32) -> Self {
        CompactGroupType::new(Vec::new(), rank)
    }

    pub fn simple_factors(&self) -> &[SimpleType] {
        &self.simple
    }

    pub fn torus_rank(&self) -> u32 {
        self.torus_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.simple.is_empty() && self.torus_rank == 0
    }

    /// Degrees of all factors as an ascending multiset. Torus coordinates
    /// contribute degree 1 each: the generators of `H*(BT)` sit in
    /// cohomological degree 2, i.e. polynomial degree 1.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = std::iter::repeat_n(1, self.torus_rank as usize).collect();
        for s in &self.simple {
            ds.extend(s.degrees());
        }
        ds.sort_unstable();
        ds
    }

    pub fn rank(&self) -> u32 {
        self.torus_rank + self.simple.iter().map(|s| s.rank()).sum::<u32>()
    }

    pub fn dimension(&self) -> u64 {
        u64::from(self.torus_rank) + self.simple.iter().map(|s| s.dimension()).sum::<u64>()
    }

    /// Weyl group order: product over the simple factors (tori contribute 1).
    pub fn weyl_order(&self) -> BigUint {
        self.simple.iter().map(|s| s.weyl_order()).product()
    }
}

impl fmt::Display for CompactGroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "T0");
        }
        let mut first = true;
        for s in &self.simple {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        if self.torus_rank > 0 {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "T{}", self.torus_rank)?;
        }
        Ok(())
    }
}

impl FromStr for CompactGroupType {
    type Err = LieError;

    /// Parses a group literal: factors such as `A2`, `E7`, `T1` separated by
    /// `+` or `x`, with optional whitespace around factors.
    fn from_str(input: &str) -> Result<Self, LieError> {
        let mut simple = Vec::new();
        let mut torus_rank: u32 = 0;
        let mut saw_torus_factor = false;
        let mut pos = 0;
        for piece in split_keeping_positions(input) {
            let (start, raw) = piece;
            pos = start;
            let factor = raw.trim();
            let start = start + (raw.len() - raw.trim_start().len());
            if factor.is_empty() {
                return Err(LieError::Parse {
                    pos,
                    msg: "empty factor (expected e.g. `A2`, `B1`, `T1`)".into(),
                });
            }
            let mut chars = factor.chars();
            let letter = chars.next().expect("nonempty");
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(LieError::Parse {
                    pos: start,
                    msg: format!(
                        "malformed factor `{factor}` (expected a letter followed by digits)"
                    ),
                });
            }
            let rank: u32 = digits.parse().map_err(|_| LieError::Parse {
                pos: start + 1,
                msg: format!("rank `{digits}` out of range"),
            })?;
            match letter {
                'T' => {
                    torus_rank = torus_rank
                        .checked_add(rank)
                        .ok_or_else(|| LieError::Parse {
                            pos: start,
                            msg: "total torus rank out of range".into(),
                        })?;
                    saw_torus_factor = true;
                }
                'A' | 'B' | 'C' | 'D' | 'E' | 'F' | 'G' => {
                    let family = match letter {
                        'A' => Family::A,
                        'B' => Family::B,
                        'C' => Family::C,
                        'D' => Family::D,
                        'E' => Family::E,
                        'F' => Family::F,
                        _ => Family::G,
                    };
                    let st = SimpleType::new(family, rank).map_err(|e| LieError::Parse {
                        pos: start,
                        msg: e.to_string(),
                    })?;
                    simple.push(st);
                }
                other => {
                    return Err(LieError::Parse {
                        pos: start,
                        msg: format!("unknown family letter `{other}`"),
                    });
                }
            }
        }
        if simple.is_empty() && !saw_torus_factor {
            return Err(LieError::Parse {
                pos,
                msg: "empty group literal".into(),
            });
        }
        Ok(CompactGroupType::new(simple, torus_rank))
    }
}

/// Splits on `+`/`x`, yielding `(byte_offset, substring)` pairs.
fn split_keeping_positions(input: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, b) in input.bytes().enumerate() {
        if b == b'+' || b == b'x' {
            out.push((start, &input[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &input[start..]));
    out
}

impl Serialize for CompactGroupType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CompactGroupType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse()
            .map_err(|e: LieError| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(lit: &str) -> CompactGroupType {
        lit.parse().expect(lit)
    }

    #[test]
    fn degree_tables() {
        assert_eq!(g("A2").degrees(), vec![2, 3]);
        assert_eq!(g("B2").degrees(), vec![2, 4]);
        assert_eq!(g("T3").degrees(), vec![1, 1, 1]);
        assert_eq!(g("C3").degrees(), vec![2, 4, 6]);
        assert_eq!(g("D4").degrees(), vec![2, 4, 4, 6]);
        assert_eq!(g("E6").degrees(), vec![2, 5, 6, 8, 9, 12]);
        assert_eq!(g("E7").degrees(), vec![2, 6, 8, 10, 12, 14, 18]);
        assert_eq!(g("E8").degrees(), vec![2, 8, 12, 14, 18, 20, 24, 30]);
        assert_eq!(g("F4").degrees(), vec![2, 6, 8, 12]);
        assert_eq!(g("G2").degrees(), vec![2, 6]);
        assert_eq!(g("A2+T1").degrees(), vec![1, 2, 3]);
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(g("A2").weyl_order(), 6u32.into()); // SU(3)
        assert_eq!(g("C2").weyl_order(), 8u32.into()); // Sp(2)
        assert_eq!(g("T5").weyl_order(), 1u32.into());
        assert_eq!(g("E8").weyl_order(), 696_729_600u32.into());
        // multiplicative across factors
        assert_eq!(g("A2+B2+T1").weyl_order(), 48u32.into());
    }

    /// Independent enumeration: the signed-permutation group on 2 letters,
    /// generated from the swap and one sign flip by closure.
    #[test]
    fn weyl_order_c2_matches_signed_permutation_enumeration() {
        type M = [[i64; 2]; 2];
        fn mul(a: M, b: M) -> M {
            let mut c = [[0; 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    c[i][j] = (0..2).map(|k| a[i][k] * b[k][j]).sum();
                }
            }
            c
        }
        let swap: M = [[0, 1], [1, 0]];
        let flip: M = [[-1, 0], [0, 1]];
        let mut elements = vec![[[1, 0], [0, 1]]];
        loop {
            let mut added = false;
            for e in elements.clone() {
                for gen in [swap, flip] {
                    let p = mul(e, gen);
                    if !elements.contains(&p) {
                        elements.push(p);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        assert_eq!(BigUint::from(elements.len()), g("C2").weyl_order());
    }

    /// Independent root count: roots of B2 are the nonzero vectors in
    /// {-1,0,1}^2 of squared length 1 or 2; dimension = #roots + rank.
    #[test]
    fn b2_dimension_matches_root_enumeration() {
        let mut roots = 0;
        for a in -1i32..=1 {
            for b in -1i32..=1 {
                let n = a * a + b * b;
                if (a, b) != (0, 0) && (n == 1 || n == 2) {
                    roots += 1;
                }
            }
        }
        assert_eq!(roots, 8);
        assert_eq!(g("B2").dimension(), roots as u64 + 2);
    }

    #[test]
    fn ranks_and_dimensions() {
        assert_eq!(g("B2").rank(), 2);
        assert_eq!(g("B2").dimension(), 10); // SO(5)
        assert_eq!(g("A2+T1").rank(), 3);
        assert_eq!(g("A2+T1").dimension(), 9); // U(3)
        assert_eq!(g("T0").rank(), 0);
        assert_eq!(g("T0").dimension(), 0);
        assert_eq!(g("E8").dimension(), 248);
        assert_eq!(g("F4").dimension(), 52);
        assert_eq!(g("G2").dimension(), 14);
    }

    #[test]
    fn low_rank_coincidences() {
        for lit in ["A1", "B1", "C1"] {
            assert_eq!(g(lit).degrees(), vec![2], "{lit}");
            assert_eq!(g(lit).dimension(), 3, "{lit}");
            assert_eq!(g(lit).weyl_order(), 2u32.into(), "{lit}");
        }
        // D2 carries the A1+A1 data
        assert_eq!(g("D2").degrees(), g("A1+A1").degrees());
        assert_eq!(g("D2").dimension(), g("A1+A1").dimension());
        assert_eq!(g("D2").weyl_order(), g("A1+A1").weyl_order());
        // D3 carries the A3 data
        assert_eq!(g("D3").degrees(), g("A3").degrees());
        assert_eq!(g("D3").dimension(), 15);
        assert_eq!(g("D3").weyl_order(), 24u32.into());
    }

    /// dim − rank = 2·Σ(dᵢ − 1) across a spread of types.
    #[test]
    fn dimension_rank_degree_consistency() {
        for lit in [
            "A1", "A4", "B3", "C4", "D2", "D3", "D5", "E6", "E7", "E8", "F4", "G2", "B2+T2",
            "A2+A2+T1",
        ] {
            let gt = g(lit);
            let droot: u64 = 2 * gt.degrees().iter().map(|&d| u64::from(d) - 1).sum::<u64>();
            assert_eq!(gt.dimension() - u64::from(gt.rank()), droot, "{lit}");
        }
    }

    #[test]
    fn parser_accepts_both_separators_and_sorts() {
        assert_eq!(g("C1xC1"), g("C1+C1"));
        assert_eq!(g("T1+A2"), g("A2+T1"));
        assert_eq!(g("T1+T1"), g("T2"));
        assert_eq!(g(" B1 + T1 ").to_string(), "B1+T1");
        assert_eq!(g("A2+T1").to_string(), "A2+T1");
        assert_eq!(g("T0").to_string(), "T0");
    }

    #[test]
    fn display_roundtrip() {
        for lit in ["B2", "A2+T1", "C1+C1", "T2", "T0", "A1+B2+T3", "E8"] {
            let gt = g(lit);
            assert_eq!(g(&gt.to_string()), gt, "{lit}");
        }
    }

    #[test]
    fn parser_rejections() {
        for bad in [
            "", "A0", "D1", "E5", "E9", "F3", "G1", "Q3", "A2+", "A", "2B", "A2*T1",
        ] {
            let r: Result<CompactGroupType, _> = bad.parse();
            assert!(r.is_err(), "{bad:?} should not parse");
        }
        // errors carry a byte position
        match "A2+Q3".parse::<CompactGroupType>() {
            Err(LieError::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn multiset_semantics() {
        assert_ne!(g("A1+A1"), g("A1"));
        assert_eq!(g("A1+A1").weyl_order(), 4u32.into());
        assert_eq!(g("D2").rank(), 2);
    }
}
