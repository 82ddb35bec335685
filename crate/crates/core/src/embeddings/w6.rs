//! Planar `{1, d}` realizations of the wheel `W6`: a hub joined to the five
//! vertices of a rim cycle.
//!
//! Spoke `i` joins the hub to rim vertex `i`; rim edge `i` joins rim vertices
//! `i` and `i + 1`. The angle at the hub between spokes `i` and `i + 1` is
//! fixed by the three labels, and the rim closes when the signed angles sum to
//! a multiple of `2π`.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive};
use serde::Serialize;

use super::Label;
use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, Interval};

const START_PREC: u32 = 128;
const MAX_PREC: u32 = 4096;

/// One labeled, oriented realization.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct W6Solution {
    pub spokes: [Label; 5],
    pub rim: [Label; 5],
    /// `+1` for a counterclockwise turn from spoke `i` to spoke `i + 1`.
    pub signs: [i8; 5],
    /// The signed angles sum to `2π * winding`.
    pub winding: i64,
}

impl W6Solution {
    /// `spokes=1d1dd rim=11d1d signs=++-+-`.
    pub fn label(&self) -> String {
        let word = |ls: &[Label; 5]| ls.iter().map(|l| l.symbol()).collect::<String>();
        let signs: String = self
            .signs
            .iter()
            .map(|&e| if e > 0 { '+' } else { '-' })
            .collect();
        format!("spokes={} rim={} signs={signs}", word(&self.spokes), word(&self.rim))
    }

    /// Hub then rim vertices 0..5, as interval points; rim vertex 0 lies on
    /// the positive x-axis.
    pub fn placement(&self, d2: &FieldElement, prec: u32) -> Vec<(Interval, Interval)> {
        let t = d2.interval(prec);
        let mut out = vec![(Interval::from_int(0, prec), Interval::from_int(0, prec))];
        let (mut re, mut im) = (Interval::from_int(1, prec), Interval::from_int(0, prec));
        for i in 0..5 {
            let len = length(self.spokes[i], &t);
            out.push((re.mul(&len), im.mul(&len)));
            let (c, s) = turn(self.spokes[i], self.spokes[(i + 1) % 5], self.rim[i], &t);
            let s = if self.signs[i] > 0 { s } else { s.neg() };
            let next_re = re.mul(&c).sub(&im.mul(&s));
            let next_im = re.mul(&s).add(&im.mul(&c));
            re = next_re;
            im = next_im;
        }
        out
    }

    fn key(&self) -> ([Label; 5], [Label; 5], [i8; 5]) {
        (self.spokes, self.rim, self.signs)
    }
}

/// Number of classes under each way of identifying realizations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConventionCounts {
    /// Labeled, oriented solutions with rim vertex 0 fixed.
    pub raw: usize,
    /// Up to rotating the rim.
    pub rotation: usize,
    /// Up to rotating and reversing the rim.
    pub rotation_reversal: usize,
    /// Up to rotating the rim and reflecting the plane.
    pub rotation_reflection: usize,
    /// Up to every automorphism of the wheel and every isometry of the plane.
    pub full: usize,
}

#[derive(Clone, Debug)]
pub struct W6Report {
    pub d2: FieldElement,
    /// Every raw solution, in lexicographic order of labels and signs.
    pub solutions: Vec<W6Solution>,
    /// The least raw solution of each congruence class.
    pub classes: Vec<W6Solution>,
    pub counts: ConventionCounts,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Group {
    Rotation,
    RotationReversal,
    RotationReflection,
    Full,
}

fn canonical(sol: &W6Solution, group: Group) -> ([Label; 5], [Label; 5], [i8; 5]) {
    let reversal = matches!(group, Group::RotationReversal | Group::Full);
    let reflection = matches!(group, Group::RotationReflection | Group::Full);
    let (s, r, e) = sol.key();
    let mut best = None;
    for rot in 0..5 {
        for rev in [false, true] {
            if rev && !reversal {
                continue;
            }
            for refl in [false, true] {
                if refl && !reflection {
                    continue;
                }
                let form: ([Label; 5], [Label; 5], [i8; 5]) = if rev {
                    (
                        std::array::from_fn(|i| s[(rot + 5 - i) % 5]),
                        std::array::from_fn(|i| r[(rot + 9 - i) % 5]),
                        std::array::from_fn(|i| -e[(rot + 9 - i) % 5]),
                    )
                } else {
                    (
                        std::array::from_fn(|i| s[(rot + i) % 5]),
                        std::array::from_fn(|i| r[(rot + i) % 5]),
                        std::array::from_fn(|i| e[(rot + i) % 5]),
                    )
                };
                let form = if refl {
                    (form.0, form.1, form.2.map(|x| -x))
                } else {
                    form
                };
                if best.as_ref().is_none_or(|b| &form < b) {
                    best = Some(form);
                }
            }
        }
    }
    best.expect("at least the identity")
}

fn length(l: Label, t: &Interval) -> Interval {
    match l {
        Label::Unit => Interval::from_int(1, t.prec()),
        Label::D => t.sqrt(),
    }
}

fn square(l: Label, t: &Interval) -> Interval {
    match l {
        Label::Unit => Interval::from_int(1, t.prec()),
        Label::D => t.clone(),
    }
}

/// Cosine and (non-negative) sine of the hub angle between spokes `a` and `b`
/// when the rim edge is `c`.
fn turn(a: Label, b: Label, c: Label, t: &Interval) -> (Interval, Interval) {
    let num = square(a, t).add(&square(b, t)).sub(&square(c, t));
    let den = length(a, t).mul(&length(b, t)).scale(2);
    let cos = num.div(&den).expect("spokes are non-zero").clamp(-1, 1);
    let one = Interval::from_int(1, t.prec());
    let sin = one.sub(&cos.mul(&cos)).sqrt();
    (cos, sin)
}

fn angle(a: Label, b: Label, c: Label, t: &Interval) -> Interval {
    turn(a, b, c, t).0.acos()
}

/// The hub angle's cosine in exact form `num / sqrt(den2)`.
#[derive(Clone)]
struct ExactCos {
    num: FieldElement,
    den2: FieldElement,
}

impl ExactCos {
    fn new(a: Label, b: Label, c: Label, t: &FieldElement) -> ExactCos {
        let sq = |l: Label| match l {
            Label::Unit => FieldElement::one(t.tower()),
            Label::D => t.clone(),
        };
        let num = sq(a) + sq(b) - sq(c);
        let den2 = (sq(a) * sq(b)).scale_ratio(4, 1);
        ExactCos { num, den2 }
    }

    /// `cos^2 - 1` has this sign.
    fn excess(&self) -> i8 {
        (self.num.square() - &self.den2).signum()
    }

    fn same_as(&self, other: &ExactCos) -> bool {
        self.num.signum() == other.num.signum()
            && self.num.square() * &other.den2 == other.num.square() * &self.den2
    }
}

const LABELS: [Label; 2] = [Label::Unit, Label::D];

fn labels_of(mask: u32) -> [Label; 5] {
    std::array::from_fn(|i| LABELS[(mask >> (4 - i) & 1) as usize])
}

fn triple_index(a: Label, b: Label, c: Label) -> usize {
    (a as usize) << 2 | (b as usize) << 1 | c as usize
}

fn all_triples() -> impl Iterator<Item = (Label, Label, Label)> {
    (0..8).map(|m| (LABELS[m >> 2 & 1], LABELS[m >> 1 & 1], LABELS[m & 1]))
}

/// Realizations of `W6` at `d^2 = d2`, with closure certified to `10^-30 * 2π`.
pub fn w6_embeddings(d2: &FieldElement) -> Result<W6Report> {
    // 2π * 10^-30, rounded up
    let tol = BigRational::new(62_832.into(), num_traits::pow(num_bigint::BigInt::from(10), 34));
    w6_embeddings_with_tol(d2, &tol)
}

/// Realizations of `W6` at `d^2 = d2`.
///
/// A labeling and sign pattern is accepted when, for some integer `k`, the
/// enclosure of `Σ εᵢγᵢ - 2πk` contains zero and is at most `tol` wide, and is
/// rejected when every such enclosure excludes zero. Anything else raises the
/// working precision, up to a limit past which the result is
/// [`Error::UncertifiedAtTolerance`].
pub fn w6_embeddings_with_tol(d2: &FieldElement, tol: &BigRational) -> Result<W6Report> {
    if d2.signum() <= 0 || (d2 - &FieldElement::one(d2.tower())).signum() <= 0 {
        return Err(Error::DNotGreaterThanOne);
    }
    let exact: Vec<ExactCos> = all_triples().map(|(a, b, c)| ExactCos::new(a, b, c, d2)).collect();
    let excess: Vec<i8> = exact.iter().map(ExactCos::excess).collect();
    let same: Vec<Vec<bool>> = exact
        .iter()
        .map(|x| exact.iter().map(|y| x.same_as(y)).collect())
        .collect();
    let mut angles: BTreeMap<u32, Vec<Interval>> = BTreeMap::new();
    let mut angles_at = |prec: u32| -> Vec<Interval> {
        angles
            .entry(prec)
            .or_insert_with(|| {
                let t = d2.interval(prec);
                let mut g: Vec<Interval> = all_triples().map(|(a, b, c)| angle(a, b, c, &t)).collect();
                g.push(Interval::pi(prec).scale(2));
                g
            })
            .clone()
    };

    let mut solutions = Vec::new();
    for smask in 0..32 {
        let spokes = labels_of(smask);
        for rmask in 0..32 {
            let rim = labels_of(rmask);
            let kinds: [usize; 5] =
                std::array::from_fn(|i| triple_index(spokes[i], spokes[(i + 1) % 5], rim[i]));
            if kinds.iter().any(|&k| excess[k] > 0) {
                continue;
            }
            for emask in 0..32u32 {
                let signs: [i8; 5] = std::array::from_fn(|i| if emask >> (4 - i) & 1 == 1 { -1 } else { 1 });
                // a straight or zero angle has only one orientation
                if (0..5).any(|i| signs[i] < 0 && excess[kinds[i]] == 0) {
                    continue;
                }
                if rim_vertices_collide(&spokes, &kinds, &signs, &excess, &same) {
                    continue;
                }
                let Some(winding) = closure(&kinds, &signs, tol, &mut angles_at)? else {
                    continue;
                };
                let sol = W6Solution { spokes, rim, signs, winding };
                check_placement(&sol, d2)?;
                solutions.push(sol);
            }
        }
    }
    solutions.sort();

    let count = |g: Group| solutions.iter().map(|s| canonical(s, g)).collect::<BTreeSet<_>>().len();
    let mut seen = BTreeSet::new();
    let classes = solutions
        .iter()
        .filter(|s| seen.insert(canonical(s, Group::Full)))
        .cloned()
        .collect();
    let counts = ConventionCounts {
        raw: solutions.len(),
        rotation: count(Group::Rotation),
        rotation_reversal: count(Group::RotationReversal),
        rotation_reflection: count(Group::RotationReflection),
        full: count(Group::Full),
    };
    Ok(W6Report {
        d2: d2.clone(),
        solutions,
        classes,
        counts,
    })
}

/// Rim vertices `i` and `i + 2` coincide exactly when their spokes agree and
/// the two angles between them cancel modulo `2π`.
fn rim_vertices_collide(
    spokes: &[Label; 5],
    kinds: &[usize; 5],
    signs: &[i8; 5],
    excess: &[i8],
    same: &[Vec<bool>],
) -> bool {
    (0..5).any(|i| {
        let j = (i + 1) % 5;
        spokes[i] == spokes[(i + 2) % 5]
            && same[kinds[i]][kinds[j]]
            && (signs[i] != signs[j] || excess[kinds[i]] == 0)
    })
}

fn closure(
    kinds: &[usize; 5],
    signs: &[i8; 5],
    tol: &BigRational,
    angles_at: &mut impl FnMut(u32) -> Vec<Interval>,
) -> Result<Option<i64>> {
    let mut prec = START_PREC;
    loop {
        let gamma = angles_at(prec);
        let mut sum = Interval::from_int(0, prec);
        for i in 0..5 {
            sum = if signs[i] > 0 {
                sum.add(&gamma[kinds[i]])
            } else {
                sum.sub(&gamma[kinds[i]])
            };
        }
        let two_pi = &gamma[8];
        let mut undecided = false;
        for k in -2..=2i64 {
            let diff = sum.sub(&two_pi.scale(k));
            if diff.contains_zero() {
                if &diff.width() <= tol {
                    return Ok(Some(k));
                }
                undecided = true;
            }
        }
        if !undecided {
            return Ok(None);
        }
        prec *= 2;
        if prec > MAX_PREC {
            return Err(Error::UncertifiedAtTolerance);
        }
    }
}

/// Rebuilds the points and confirms every rim distance against its label.
fn check_placement(sol: &W6Solution, d2: &FieldElement) -> Result<()> {
    let mut prec = START_PREC;
    loop {
        let pts = sol.placement(d2, prec);
        let t = d2.interval(prec);
        let one = Interval::from_int(1, prec);
        let ok = (0..5).all(|i| {
            let (p, q) = (&pts[1 + i], &pts[1 + (i + 1) % 5]);
            let dx = p.0.sub(&q.0);
            let dy = p.1.sub(&q.1);
            let dist = dx.mul(&dx).add(&dy.mul(&dy));
            let (want, other) = match sol.rim[i] {
                Label::Unit => (&one, &t),
                Label::D => (&t, &one),
            };
            dist.sub(want).contains_zero() && !dist.sub(other).contains_zero()
        });
        if ok {
            return Ok(());
        }
        prec *= 2;
        if prec > MAX_PREC {
            return Err(Error::UncertifiedAtTolerance);
        }
    }
}

/// A value of `d^2` at which some labeling of `W6` closes up.
#[derive(Clone, Debug, Serialize)]
pub struct W6Root {
    /// `lo <= d^2 <= hi`.
    #[serde(serialize_with = "ser_ratio")]
    pub lo: BigRational,
    #[serde(serialize_with = "ser_ratio")]
    pub hi: BigRational,
    /// Labelings and sign patterns whose closure condition vanishes here.
    pub labelings: Vec<String>,
}

fn ser_ratio<S: serde::Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::exactnum::interval::decimal(q, 15))
}

impl W6Root {
    pub fn contains(&self, d2: &FieldElement) -> bool {
        let t = d2.tower();
        let lo = FieldElement::from_rational(t, self.lo.clone());
        let hi = FieldElement::from_rational(t, self.hi.clone());
        (d2 - &lo).signum() >= 0 && (&hi - d2).signum() >= 0
    }

    pub fn midpoint(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

/// Kinds of hub angle as functions of `t = d^2`, keyed by spoke and rim squares.
/// The equilateral kinds `(1,1,1)` and `(d,d,d)` both give `π/3` and share a slot.
fn kind_of(a: Label, b: Label, c: Label) -> usize {
    use Label::*;
    match (a, b, c) {
        (Unit, Unit, Unit) | (D, D, D) => 0,
        (Unit, Unit, D) => 1,
        (Unit, D, Unit) | (D, Unit, Unit) => 2,
        (Unit, D, D) | (D, Unit, D) => 3,
        (D, D, Unit) => 4,
    }
}

const KIND_TRIPLES: [(Label, Label, Label); 5] = [
    (Label::Unit, Label::Unit, Label::Unit),
    (Label::Unit, Label::Unit, Label::D),
    (Label::Unit, Label::D, Label::Unit),
    (Label::Unit, Label::D, Label::D),
    (Label::D, Label::D, Label::Unit),
];

fn kind_angles(t: &BigRational, prec: u32) -> [Interval; 5] {
    let t = Interval::from_rational(t, prec);
    KIND_TRIPLES.map(|(a, b, c)| angle(a, b, c, &t))
}

fn kind_angles_f64(t: f64) -> [f64; 5] {
    let d = t.sqrt();
    [
        std::f64::consts::FRAC_PI_3,
        (1.0 - t / 2.0).clamp(-1.0, 1.0).acos(),
        (d / 2.0).clamp(-1.0, 1.0).acos(),
        (1.0 / (2.0 * d)).acos(),
        (1.0 - 1.0 / (2.0 * t)).acos(),
    ]
}

/// Signed kind counts and winding number; the closure function is
/// `Σ n_K γ_K(t) - 2πk`.
type Key = ([i32; 5], i64);

fn eval_key(key: &Key, t: &BigRational, prec: u32) -> Interval {
    let g = kind_angles(t, prec);
    let mut sum = Interval::pi(prec).scale(-2 * key.1);
    for (n, gk) in key.0.iter().zip(&g) {
        sum = sum.add(&gk.scale(*n as i64));
    }
    sum
}

/// Certified sign of the closure function at a rational `t`; `0` if unresolved.
fn sign_at(key: &Key, t: &BigRational) -> i32 {
    let mut prec = 96;
    while prec <= 1024 {
        let v = eval_key(key, t, prec);
        if v.is_positive() {
            return 1;
        }
        if v.is_negative() {
            return -1;
        }
        prec *= 2;
    }
    0
}

/// Values of `d^2` in `[lo, hi]` at which some labeling and sign pattern of
/// `W6` satisfies the closure condition.
///
/// The range is cut into cells no wider than `resolution`; a floating-point
/// scan proposes cells with a sign change and each proposal is confirmed by
/// interval evaluation at the cell ends, then bisected to width `10^-12`.
/// Roots where the closure function touches zero without changing sign, or
/// pairs of roots within one cell, are not reported.
pub fn w6_spectrum(lo: &BigRational, hi: &BigRational, resolution: &BigRational) -> Result<Vec<W6Root>> {
    if lo >= hi {
        return Ok(Vec::new());
    }
    if lo < &BigRational::one() {
        return Err(Error::DNotGreaterThanOne);
    }
    if !resolution.is_positive() || resolution >= &(hi - lo) {
        return Err(Error::ResolutionTooCoarse);
    }

    // every labeling and sign pattern, grouped by its closure function
    let mut groups: BTreeMap<[i32; 5], Vec<String>> = BTreeMap::new();
    for smask in 0..32 {
        let spokes = labels_of(smask);
        for rmask in 0..32 {
            let rim = labels_of(rmask);
            for emask in 0..32u32 {
                let signs: [i8; 5] = std::array::from_fn(|i| if emask >> (4 - i) & 1 == 1 { -1 } else { 1 });
                let mut v = [0i32; 5];
                for i in 0..5 {
                    v[kind_of(spokes[i], spokes[(i + 1) % 5], rim[i])] += signs[i] as i32;
                }
                if v[1..].iter().all(|&n| n == 0) {
                    continue;
                }
                let sol = W6Solution { spokes, rim, signs, winding: 0 };
                groups.entry(v).or_default().push(sol.label());
            }
        }
    }

    let cells = ((hi - lo) / resolution).ceil().to_integer().to_usize().unwrap_or(usize::MAX);
    let step = (hi - lo) / BigRational::from_usize(cells).expect("cell count");
    let grid: Vec<BigRational> = (0..=cells)
        .map(|j| lo + &step * BigRational::from_usize(j).expect("index"))
        .collect();
    let grid_f: Vec<f64> = grid.iter().map(|q| q.to_f64().unwrap_or(f64::NAN)).collect();
    let angles_f: Vec<[f64; 5]> = grid_f.iter().map(|&t| kind_angles_f64(t)).collect();
    let four = BigRational::from_integer(4.into());
    let width = BigRational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 12));

    let mut found: Vec<W6Root> = Vec::new();
    for (v, labelings) in &groups {
        let limited = v[1] != 0 || v[2] != 0;
        for k in -2..=2i64 {
            let key: Key = (*v, k);
            let f = |j: usize| -> f64 {
                v.iter().zip(&angles_f[j]).map(|(n, g)| *n as f64 * g).sum::<f64>()
                    - 2.0 * std::f64::consts::PI * k as f64
            };
            for j in 0..cells {
                if limited && grid[j + 1] > four {
                    break;
                }
                let (fa, fb) = (f(j), f(j + 1));
                if fa.signum() == fb.signum() && fa.abs() > 1e-9 && fb.abs() > 1e-9 {
                    continue;
                }
                if let Some((a, b)) = certify(&key, &grid[j], &grid[j + 1], &width) {
                    found.push(W6Root {
                        lo: a,
                        hi: b,
                        labelings: labelings.clone(),
                    });
                }
            }
        }
    }

    found.sort_by(|a, b| a.lo.cmp(&b.lo));
    let mut merged: Vec<W6Root> = Vec::new();
    for r in found {
        match merged.last_mut() {
            Some(m) if r.lo <= m.hi => {
                if r.hi > m.hi {
                    m.hi = r.hi;
                }
                m.labelings.extend(r.labelings);
            }
            _ => merged.push(r),
        }
    }
    for m in &mut merged {
        m.labelings.sort();
        m.labelings.dedup();
    }
    Ok(merged)
}

/// Confirms a sign change of the closure function on `[a, b]` and bisects it.
fn certify(key: &Key, a: &BigRational, b: &BigRational, width: &BigRational) -> Option<(BigRational, BigRational)> {
    let (sa, sb) = (sign_at(key, a), sign_at(key, b));
    if sa == 0 {
        return Some((a.clone(), a.clone()));
    }
    if sb == 0 {
        return Some((b.clone(), b.clone()));
    }
    if sa == sb {
        return None;
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let two = BigRational::from_integer(2.into());
    while &(&b - &a) > width {
        let mid = (&a + &b) / &two;
        match sign_at(key, &mid) {
            0 => return Some((mid.clone(), mid)),
            s if s == sa => a = mid,
            _ => b = mid,
        }
    }
    Some((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{ratio, Tower};

    #[test]
    fn labels_print_as_words() {
        let sol = W6Solution {
            spokes: [Label::Unit, Label::D, Label::Unit, Label::D, Label::D],
            rim: [Label::Unit, Label::Unit, Label::D, Label::Unit, Label::D],
            signs: [1, 1, -1, 1, -1],
            winding: 0,
        };
        assert_eq!(sol.label(), "spokes=1d1dd rim=11d1d signs=++-+-");
    }

    #[test]
    fn unit_wheel_does_not_close() {
        let t = Tower::rationals();
        let r = w6_embeddings(&FieldElement::from_int(&t, 4)).unwrap();
        let all_unit = [Label::Unit; 5];
        assert!(r.solutions.iter().all(|s| s.spokes != all_unit || s.rim != all_unit));
    }

    #[test]
    fn rejects_small_d() {
        let t = Tower::rationals();
        assert_eq!(
            w6_embeddings(&FieldElement::one(&t)).unwrap_err(),
            Error::DNotGreaterThanOne
        );
    }

    #[test]
    fn spectrum_edge_cases() {
        assert!(w6_spectrum(&ratio(3, 1), &ratio(2, 1), &ratio(1, 10)).unwrap().is_empty());
        assert_eq!(
            w6_spectrum(&ratio(2, 1), &ratio(3, 1), &ratio(2, 1)).unwrap_err(),
            Error::ResolutionTooCoarse
        );
    }

    #[test]
    fn two_plus_root_two_closes() {
        let t = Tower::from_decls(&[("s2", "2")]).unwrap();
        let d2 = FieldElement::parse(&t, "2 + s2").unwrap();
        let r = w6_embeddings(&d2).unwrap();
        assert!(r.counts.full >= 1);
        for s in &r.solutions {
            assert_eq!(canonical(s, Group::Full), canonical(&r.classes[0], Group::Full));
        }
    }
}
