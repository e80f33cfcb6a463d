//! The Green ring engine: closed-form fusion rules for every pair of
//! labels, bilinear multiplication, the polynomial presentation with a
//! normal-form rewriter, the omega-power correction polynomials, and the
//! semisimplification onto the group ring of C2 x Z.
//!
//! Everything here is integer combinatorics on labels; the module-level
//! oracle in [`crate::decomp`] cross-checks each rule by brute force.

use crate::catalog::Label;
use crate::field::ProjPoint;
use std::collections::BTreeMap;

/// A finitely supported integer combination of labels.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GreenElement {
    terms: BTreeMap<Label, i64>,
}

impl GreenElement {
    pub fn zero() -> GreenElement {
        GreenElement::default()
    }

    pub fn unit() -> GreenElement {
        GreenElement::from_label(Label::Simple(0))
    }

    pub fn from_label(l: Label) -> GreenElement {
        let mut g = GreenElement::zero();
        g.add_term(l, 1);
        g
    }

    pub fn add_term(&mut self, l: Label, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(l).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&l);
        }
    }

    pub fn get(&self, l: Label) -> i64 {
        self.terms.get(&l).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, &i64)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &GreenElement) -> GreenElement {
        let mut out = self.clone();
        for (&l, &c) in other.iter() {
            out.add_term(l, c);
        }
        out
    }

    pub fn scaled(&self, c: i64) -> GreenElement {
        let mut out = GreenElement::zero();
        for (&l, &v) in self.iter() {
            out.add_term(l, c * v);
        }
        out
    }

    /// Total dimension: the dimension homomorphism of the Green ring.
    pub fn dimension(&self) -> i64 {
        self.iter().map(|(l, &c)| c * l.dim() as i64).sum()
    }

    /// Entry-wise dual (the Green ring involution).
    pub fn dual(&self) -> GreenElement {
        let mut out = GreenElement::zero();
        for (&l, &c) in self.iter() {
            out.add_term(l.dual(), c);
        }
        out
    }
}

impl std::fmt::Display for GreenElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (l, &c) in self.iter() {
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
                first = false;
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{a} ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// a P0 + b P1.
fn projectives(a: i64, b: i64) -> GreenElement {
    let mut g = GreenElement::zero();
    g.add_term(Label::Projective(0), a);
    g.add_term(Label::Projective(1), b);
    g
}

/// M (x) P_i in closed form from the composition multiplicities of M.
fn projective_fuse(i: u8, (n0, n1): (usize, usize)) -> GreenElement {
    let (n0, n1) = (n0 as i64, n1 as i64);
    if i == 0 {
        projectives(n0, 3 * n1)
    } else {
        projectives(n1, 2 * n1 + n0)
    }
}

fn syzygy_label(e: i64, parity: u8) -> Label {
    if e == 0 {
        Label::Simple(parity)
    } else {
        Label::Syzygy(e, parity)
    }
}

/// Tensor of two (co)syzygies of simples, with exponent 0 meaning the simple
/// itself. Returns the non-projective part's label plus the projective rest.
fn syzygy_fuse(s: i64, i: u8, t: i64, j: u8) -> GreenElement {
    let parity = (i + j) % 2;
    let mut out;
    if s >= 0 && t >= 0 {
        let (su, tu) = (s, t);
        let (pa, pb) = syzygy_projective_part(su, i, tu, j);
        out = projectives(pa, pb);
        out.add_term(syzygy_label(su + tu, parity), 1);
    } else if s <= 0 && t <= 0 {
        let (su, tu) = (-s, -t);
        let (pa, pb) = syzygy_projective_part(su, i, tu, j);
        out = projectives(pa, pb);
        out.add_term(syzygy_label(-(su + tu), parity), 1);
    } else {
        // one syzygy, one cosyzygy
        let (su, iu, tu, ju) = if s > 0 { (s, i, -t, j) } else { (t, j, -s, i) };
        let (pa, pb) = mixed_projective_part(su, iu, tu, ju);
        out = projectives(pa, pb);
        out.add_term(syzygy_label(su - tu, parity), 1);
    }
    out
}

/// Projective part of a syzygy (x) syzygy product (same-sign case), keyed on
/// the parities of s+i and t+j.
fn syzygy_projective_part(s: i64, i: u8, t: i64, j: u8) -> (i64, i64) {
    let se = (s + i as i64) % 2 == 0;
    let te = (t + j as i64) % 2 == 0;
    match (se, te) {
        (true, true) => (s * t, s * t),
        (true, false) => (0, s * (2 * t + 1)),
        (false, true) => (0, (2 * s + 1) * t),
        (false, false) => (s * t, (s + 1) * (t + 1)),
    }
}

/// Projective part of a syzygy (x) cosyzygy product: eight cases, split by
/// the parities of s+i and t+j and by comparing the exponents s and t (the
/// two formulas of each parity class agree at s = t).
fn mixed_projective_part(s: i64, i: u8, t: i64, j: u8) -> (i64, i64) {
    let ue = (s + i as i64) % 2 == 0;
    let we = (t + j as i64) % 2 == 0;
    let le = s <= t;
    match (ue, we) {
        (true, true) => {
            if le {
                (0, s * (2 * t + 1))
            } else {
                (0, (2 * s + 1) * t)
            }
        }
        (true, false) => {
            if le {
                (s * (t + 1), s * (t + 1))
            } else {
                ((s + 1) * t, s * (t + 1))
            }
        }
        (false, true) => {
            if le {
                (s * (t + 1), (s + 1) * t)
            } else {
                ((s + 1) * t, (s + 1) * t)
            }
        }
        (false, false) => {
            if le {
                (0, (2 * s + 1) * (t + 1))
            } else {
                (0, (s + 1) * (2 * t + 1))
            }
        }
    }
}

/// (r,r)-type module tensored with a (co)syzygy Om^s(V_i); `type_is_a`
/// distinguishes the A family from its dual B family.
fn type_syzygy_fuse(type_is_a: bool, x: ProjPoint, r: u32, s: i64, i: u8) -> GreenElement {
    let rr = r as i64;
    let make = |is_a: bool, pa: i64, pb: i64| {
        let mut g = projectives(pa, pb);
        g.add_term(
            if is_a {
                Label::TypeA(x, r)
            } else {
                Label::TypeB(x, r)
            },
            1,
        );
        g
    };
    if s >= 0 {
        let even = (s + i as i64) % 2 == 0;
        let su = s;
        match (type_is_a, even) {
            (true, true) => make(true, rr * su, rr * su),
            (true, false) => make(false, 0, rr * (2 * su + 1)),
            (false, true) => make(false, 0, 2 * rr * su),
            (false, false) => make(true, rr * su, rr * (su + 1)),
        }
    } else {
        let su = -s;
        let even = (su + i as i64) % 2 == 0;
        match (type_is_a, even) {
            // dual of the B (x) syzygy rule
            (true, true) => make(true, 0, 2 * rr * su),
            (true, false) => make(false, rr * su, rr * (su + 1)),
            // dual of the A (x) syzygy rule
            (false, true) => make(false, rr * su, rr * su),
            (false, false) => make(true, 0, rr * (2 * su + 1)),
        }
    }
}

/// (r,r)-type tensored with (r,r)-type.
fn type_type_fuse(
    a_left: bool,
    x: ProjPoint,
    r: u32,
    a_right: bool,
    y: ProjPoint,
    s: u32,
) -> GreenElement {
    let (rr, ss) = (r as i64, s as i64);
    let same_family = a_left == a_right;
    if x != y {
        if same_family {
            projectives(rr * ss, rr * ss)
        } else {
            projectives(0, 2 * rr * ss)
        }
    } else {
        let t = r.min(s);
        let tt = t as i64;
        let mut g = if same_family {
            projectives(rr * ss - tt, rr * ss)
        } else {
            projectives(0, 2 * rr * ss - tt)
        };
        g.add_term(Label::TypeA(x, t), 1);
        g.add_term(Label::TypeB(x, t), 1);
        g
    }
}

/// Closed-form decomposition of the tensor product of two indecomposables.
pub fn fuse(l: Label, k: Label) -> GreenElement {
    use Label::*;
    match (l, k) {
        (Simple(0), other) | (other, Simple(0)) => GreenElement::from_label(other),
        (Projective(i), other) | (other, Projective(i)) => projective_fuse(i, other.comp_mults()),
        (Simple(1), Simple(1)) => syzygy_fuse(0, 1, 0, 1),
        (Simple(1), Syzygy(t, j)) | (Syzygy(t, j), Simple(1)) => syzygy_fuse(0, 1, t, j),
        (Syzygy(s, i), Syzygy(t, j)) => syzygy_fuse(s, i, t, j),
        (TypeA(x, r), Simple(1)) | (Simple(1), TypeA(x, r)) => type_syzygy_fuse(true, x, r, 0, 1),
        (TypeB(x, r), Simple(1)) | (Simple(1), TypeB(x, r)) => type_syzygy_fuse(false, x, r, 0, 1),
        (TypeA(x, r), Syzygy(s, i)) | (Syzygy(s, i), TypeA(x, r)) => {
            type_syzygy_fuse(true, x, r, s, i)
        }
        (TypeB(x, r), Syzygy(s, i)) | (Syzygy(s, i), TypeB(x, r)) => {
            type_syzygy_fuse(false, x, r, s, i)
        }
        (TypeA(x, r), TypeA(y, s)) => type_type_fuse(true, x, r, true, y, s),
        (TypeB(x, r), TypeB(y, s)) => type_type_fuse(false, x, r, false, y, s),
        (TypeA(x, r), TypeB(y, s)) => type_type_fuse(true, x, r, false, y, s),
        (TypeB(x, r), TypeA(y, s)) => type_type_fuse(false, x, r, true, y, s),
        (Simple(i), _) | (_, Simple(i)) => panic!("simple index {i} out of range"),
    }
}

/// Bilinear extension of `fuse`.
pub fn multiply(u: &GreenElement, v: &GreenElement) -> GreenElement {
    let mut out = GreenElement::zero();
    for (&l, &cl) in u.iter() {
        for (&k, &ck) in v.iter() {
            let f = fuse(l, k);
            for (&t, &ct) in f.iter() {
                out.add_term(t, cl * ck * ct);
            }
        }
    }
    out
}

/// Integer polynomial in the class of the 3-dimensional simple module;
/// coefficient t belongs to the t-th power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaPolynomial(pub Vec<i64>);

impl OmegaPolynomial {
    fn trim(mut v: Vec<i64>) -> OmegaPolynomial {
        while v.last() == Some(&0) {
            v.pop();
        }
        OmegaPolynomial(v)
    }
}

impl std::fmt::Display for OmegaPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (t, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let var = match t {
                0 => String::new(),
                1 => "o".to_string(),
                _ => format!("o^{t}"),
            };
            let part = match (c, t) {
                (1, 0) => "1".to_string(),
                (c, 0) => c.to_string(),
                (1, _) => var,
                (c, _) => format!("{c}{var}"),
            };
            parts.push(part);
        }
        f.write_str(&parts.join(" + "))
    }
}

/// The correction polynomial f_n relating the n-th syzygy class of the
/// trivial module to the n-th power of the first one:
/// f_1 = 0, f_n = f_{n-1}(2o+1) + (n-1)o + 2 for n even and
/// f_n = f_{n-1}(2o+1) + 3(n-1) for odd n > 1.
pub fn f_poly(n: u32) -> OmegaPolynomial {
    assert!(n >= 1);
    let mut f: Vec<i64> = Vec::new();
    for m in 2..=n {
        // f * (2o + 1)
        let mut next = vec![0i64; f.len() + 1];
        for (t, &c) in f.iter().enumerate() {
            next[t] += c;
            next[t + 1] += 2 * c;
        }
        if m % 2 == 0 {
            // + (m-1) o + 2
            if next.len() < 2 {
                next.resize(2, 0);
            }
            next[1] += (m - 1) as i64;
            next[0] += 2;
        } else {
            if next.is_empty() {
                next.push(0);
            }
            next[0] += 3 * (m - 1) as i64;
        }
        f = next;
    }
    OmegaPolynomial::trim(f)
}

/// Basis monomials of the polynomial presentation. `One`, `O`, `T`, `OT`
/// stand for 1, o, t, ot; `Th(n)`/`CoTh(n)` for the n-th powers of the first
/// syzygy and cosyzygy generators; `F(x, s)` for the (r,r)-type generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PresMonomial {
    One,
    O,
    T,
    OT,
    Th(u32),
    OTh(u32),
    CoTh(u32),
    OCoTh(u32),
    F(ProjPoint, u32),
    OF(ProjPoint, u32),
}

impl std::fmt::Display for PresMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PresMonomial::One => write!(f, "1"),
            PresMonomial::O => write!(f, "o"),
            PresMonomial::T => write!(f, "t"),
            PresMonomial::OT => write!(f, "o t"),
            PresMonomial::Th(n) => write!(f, "th^{n}"),
            PresMonomial::OTh(n) => write!(f, "o th^{n}"),
            PresMonomial::CoTh(n) => write!(f, "cth^{n}"),
            PresMonomial::OCoTh(n) => write!(f, "o cth^{n}"),
            PresMonomial::F(x, s) => write!(f, "f[{},{},{s}]", x.x1.0, x.x2.0),
            PresMonomial::OF(x, s) => write!(f, "o f[{},{},{s}]", x.x1.0, x.x2.0),
        }
    }
}

/// Generators of the presentation, for building unreduced expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresGen {
    /// o = class of the 3-dimensional simple
    O,
    /// t = class of P1
    T,
    /// th = class of the first syzygy of the trivial module
    Th,
    /// cth = class of the first cosyzygy
    CoTh,
    /// f = class of B_x(s)
    F(ProjPoint, u32),
}

/// A fully reduced element of the presentation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PresentationElement {
    terms: BTreeMap<PresMonomial, i64>,
}

impl PresentationElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_mono(PresMonomial::One, 1)
    }

    pub fn from_mono(m: PresMonomial, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: PresMonomial, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(m).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn get(&self, m: PresMonomial) -> i64 {
        self.terms.get(&m).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PresMonomial, &i64)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&m, &c) in other.iter() {
            out.add_term(m, c);
        }
        out
    }

    pub fn scaled(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for (&m, &v) in self.iter() {
            out.add_term(m, c * v);
        }
        out
    }
}

impl std::fmt::Display for PresentationElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, &c) in self.iter() {
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
                first = false;
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let a = c.abs();
            if a != 1 || *m == PresMonomial::One {
                write!(f, "{a}")?;
                if *m != PresMonomial::One {
                    write!(f, " ")?;
                }
            }
            if *m != PresMonomial::One {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

/// t * th^n = t * cth^n, always a combination a (o t) + b t; the recursion
/// multiplies by th one power at a time using t th = 2 o t + t and
/// (o t) th = 5 o t + 6 t.
fn pi(n: u32) -> (i64, i64) {
    let mut ab = (0i64, 1i64);
    for _ in 0..n {
        ab = (5 * ab.0 + 2 * ab.1, 6 * ab.0 + ab.1);
    }
    ab
}

fn ot_t(a: i64, b: i64) -> PresentationElement {
    let mut p = PresentationElement::zero();
    p.add_term(PresMonomial::OT, a);
    p.add_term(PresMonomial::T, b);
    p
}

/// Multiplication of a reduced element by o, as a whole.
fn pe_times_o(pe: &PresentationElement) -> PresentationElement {
    use PresMonomial::*;
    let mut out = PresentationElement::zero();
    for (&m, &c) in pe.iter() {
        let part = match m {
            One => PresentationElement::from_mono(O, 1),
            O => {
                // o^2 = 1 + t
                let mut p = PresentationElement::from_mono(One, 1);
                p.add_term(T, 1);
                p
            }
            T => PresentationElement::from_mono(OT, 1),
            OT => ot_t(2, 3),
            Th(n) => PresentationElement::from_mono(OTh(n), 1),
            OTh(n) => {
                let (a, b) = pi(n);
                let mut p = PresentationElement::from_mono(Th(n), 1);
                p.add_term(OT, a);
                p.add_term(T, b);
                p
            }
            CoTh(n) => PresentationElement::from_mono(OCoTh(n), 1),
            OCoTh(n) => {
                let (a, b) = pi(n);
                let mut p = PresentationElement::from_mono(CoTh(n), 1);
                p.add_term(OT, a);
                p.add_term(T, b);
                p
            }
            F(x, s) => PresentationElement::from_mono(OF(x, s), 1),
            OF(x, s) => {
                // o^2 f = (1 + t) f and t f = s t (o + 1)
                let mut p = PresentationElement::from_mono(F(x, s), 1);
                p.add_term(OT, s as i64);
                p.add_term(T, s as i64);
                p
            }
        };
        out = out.add(&part.scaled(c));
    }
    out
}

/// Multiplication of one basis monomial by one generator, fully reduced.
fn mono_times_gen(m: PresMonomial, g: PresGen) -> PresentationElement {
    use PresMonomial::*;
    match g {
        PresGen::O => pe_times_o(&PresentationElement::from_mono(m, 1)),
        PresGen::T => match m {
            One => PresentationElement::from_mono(T, 1),
            O => PresentationElement::from_mono(OT, 1),
            // t^2 = 2 (o + 1) t
            T => ot_t(2, 2),
            OT => ot_t(6, 6),
            Th(n) | CoTh(n) => {
                let (a, b) = pi(n);
                ot_t(a, b)
            }
            OTh(n) | OCoTh(n) => {
                let (a, b) = pi(n);
                // o (a ot + b t) = a (2 ot + 3t) + b ot
                ot_t(2 * a + b, 3 * a)
            }
            F(_, s) => ot_t(s as i64, s as i64),
            OF(_, s) => ot_t(3 * s as i64, 3 * s as i64),
        },
        PresGen::Th => match m {
            One => PresentationElement::from_mono(Th(1), 1),
            O => PresentationElement::from_mono(OTh(1), 1),
            T => ot_t(2, 1),
            OT => ot_t(5, 6),
            Th(n) => PresentationElement::from_mono(Th(n + 1), 1),
            OTh(n) => PresentationElement::from_mono(OTh(n + 1), 1),
            CoTh(n) => {
                // th cth = 1 + 6t
                let prev = if n == 1 {
                    PresentationElement::from_mono(One, 1)
                } else {
                    PresentationElement::from_mono(CoTh(n - 1), 1)
                };
                let (a, b) = pi(n - 1);
                prev.add(&ot_t(6 * a, 6 * b))
            }
            OCoTh(n) => {
                let prev = if n == 1 {
                    PresentationElement::from_mono(O, 1)
                } else {
                    PresentationElement::from_mono(OCoTh(n - 1), 1)
                };
                let (a, b) = pi(n - 1);
                prev.add(&ot_t(6 * (2 * a + b), 6 * 3 * a))
            }
            F(x, s) => {
                // f th = o f + s t (o - 1)
                let mut p = PresentationElement::from_mono(OF(x, s), 1);
                p.add_term(OT, s as i64);
                p.add_term(T, -(s as i64));
                p
            }
            OF(x, s) => {
                // o (f th) = f + 2s ot + 4s t
                let mut p = PresentationElement::from_mono(F(x, s), 1);
                p.add_term(OT, 2 * s as i64);
                p.add_term(T, 4 * s as i64);
                p
            }
        },
        PresGen::CoTh => match m {
            One => PresentationElement::from_mono(CoTh(1), 1),
            O => PresentationElement::from_mono(OCoTh(1), 1),
            T => ot_t(2, 1),
            OT => ot_t(5, 6),
            CoTh(n) => PresentationElement::from_mono(CoTh(n + 1), 1),
            OCoTh(n) => PresentationElement::from_mono(OCoTh(n + 1), 1),
            Th(n) => {
                let prev = if n == 1 {
                    PresentationElement::from_mono(One, 1)
                } else {
                    PresentationElement::from_mono(Th(n - 1), 1)
                };
                let (a, b) = pi(n - 1);
                prev.add(&ot_t(6 * a, 6 * b))
            }
            OTh(n) => {
                let prev = if n == 1 {
                    PresentationElement::from_mono(O, 1)
                } else {
                    PresentationElement::from_mono(OTh(n - 1), 1)
                };
                let (a, b) = pi(n - 1);
                prev.add(&ot_t(6 * (2 * a + b), 6 * 3 * a))
            }
            F(x, s) => {
                // f cth = o f + 2s t
                let mut p = PresentationElement::from_mono(OF(x, s), 1);
                p.add_term(T, 2 * s as i64);
                p
            }
            OF(x, s) => {
                // o (f cth) = f + 3s ot + s t
                let mut p = PresentationElement::from_mono(F(x, s), 1);
                p.add_term(OT, 3 * s as i64);
                p.add_term(T, s as i64);
                p
            }
        },
        PresGen::F(y, t) => match m {
            One => PresentationElement::from_mono(F(y, t), 1),
            O => PresentationElement::from_mono(OF(y, t), 1),
            T => ot_t(t as i64, t as i64),
            OT => ot_t(3 * t as i64, 3 * t as i64),
            Th(n) => {
                // fold th onto f n times
                let mut acc = PresentationElement::from_mono(F(y, t), 1);
                for _ in 0..n {
                    acc = pe_times_gen(&acc, PresGen::Th);
                }
                acc
            }
            OTh(n) => {
                let mut acc = PresentationElement::from_mono(OF(y, t), 1);
                for _ in 0..n {
                    acc = pe_times_gen(&acc, PresGen::Th);
                }
                acc
            }
            CoTh(n) => {
                let mut acc = PresentationElement::from_mono(F(y, t), 1);
                for _ in 0..n {
                    acc = pe_times_gen(&acc, PresGen::CoTh);
                }
                acc
            }
            OCoTh(n) => {
                let mut acc = PresentationElement::from_mono(OF(y, t), 1);
                for _ in 0..n {
                    acc = pe_times_gen(&acc, PresGen::CoTh);
                }
                acc
            }
            F(x, s) => {
                if x != y {
                    // f_x f_y = s t t(o - 1)
                    ot_t((s * t) as i64, -((s * t) as i64))
                } else {
                    // f_{x,s} f_{x,t} = o f_m + f_m + (st - m) t (o - 1), m = min
                    let mmin = s.min(t);
                    let extra = (s as i64) * (t as i64) - mmin as i64;
                    let mut p = PresentationElement::from_mono(OF(x, mmin), 1);
                    p.add_term(F(x, mmin), 1);
                    p.add_term(OT, extra);
                    p.add_term(T, -extra);
                    p
                }
            }
            OF(x, s) => {
                let base = mono_times_gen(F(x, s), PresGen::F(y, t));
                pe_times_o(&base)
            }
        },
    }
}

fn pe_times_gen(pe: &PresentationElement, g: PresGen) -> PresentationElement {
    let mut out = PresentationElement::zero();
    for (&m, &c) in pe.iter() {
        out = out.add(&mono_times_gen(m, g).scaled(c));
    }
    out
}

/// Generator word of a basis monomial.
fn mono_gens(m: PresMonomial) -> Vec<PresGen> {
    use PresMonomial::*;
    match m {
        One => vec![],
        O => vec![PresGen::O],
        T => vec![PresGen::T],
        OT => vec![PresGen::O, PresGen::T],
        Th(n) => vec![PresGen::Th; n as usize],
        OTh(n) => {
            let mut v = vec![PresGen::O];
            v.extend(vec![PresGen::Th; n as usize]);
            v
        }
        CoTh(n) => vec![PresGen::CoTh; n as usize],
        OCoTh(n) => {
            let mut v = vec![PresGen::O];
            v.extend(vec![PresGen::CoTh; n as usize]);
            v
        }
        F(x, s) => vec![PresGen::F(x, s)],
        OF(x, s) => vec![PresGen::O, PresGen::F(x, s)],
    }
}

/// Product of two reduced elements.
pub fn pe_multiply(u: &PresentationElement, v: &PresentationElement) -> PresentationElement {
    let mut out = PresentationElement::zero();
    for (&m2, &c2) in v.iter() {
        let mut acc = u.clone();
        for g in mono_gens(m2) {
            acc = pe_times_gen(&acc, g);
        }
        out = out.add(&acc.scaled(c2));
    }
    out
}

/// Normal form of an unreduced integer combination of generator words.
pub fn reduce(expr: &[(i64, Vec<PresGen>)]) -> PresentationElement {
    let mut out = PresentationElement::zero();
    for (c, word) in expr {
        let mut acc = PresentationElement::one();
        for &g in word {
            acc = pe_times_gen(&acc, g);
        }
        out = out.add(&acc.scaled(*c));
    }
    out
}

/// o^k t reduced, as (coefficient of ot, coefficient of t).
fn o_power_times_t(k: usize) -> (i64, i64) {
    let mut ab = (0i64, 1i64); // t
    for _ in 0..k {
        // (a ot + b t) o = a (2 ot + 3 t) + b ot
        ab = (2 * ab.0 + ab.1, 3 * ab.0);
    }
    ab
}

/// Image of a label under the basis change into the presentation.
pub fn label_to_presentation(l: Label) -> PresentationElement {
    use PresMonomial::*;
    match l {
        Label::Simple(0) => PresentationElement::from_mono(One, 1),
        Label::Simple(_) => PresentationElement::from_mono(O, 1),
        Label::Projective(1) => PresentationElement::from_mono(T, 1),
        Label::Projective(_) => {
            // [P0] = o t - 2 t
            let mut p = PresentationElement::from_mono(OT, 1);
            p.add_term(T, -2);
            p
        }
        Label::Syzygy(s, i) => {
            let n = s.unsigned_abs() as u32;
            let f = f_poly(n);
            let mut p = if s > 0 {
                if i == 0 {
                    PresentationElement::from_mono(Th(n), 1)
                } else {
                    PresentationElement::from_mono(OTh(n), 1)
                }
            } else if i == 0 {
                PresentationElement::from_mono(CoTh(n), 1)
            } else {
                PresentationElement::from_mono(OCoTh(n), 1)
            };
            if i == 0 {
                // subtract f_n t
                for (k, &c) in f.0.iter().enumerate() {
                    let (a, b) = o_power_times_t(k);
                    p.add_term(OT, -c * a);
                    p.add_term(T, -c * b);
                }
            } else {
                // subtract (o f_n + n + [n odd]) t
                for (k, &c) in f.0.iter().enumerate() {
                    let (a, b) = o_power_times_t(k + 1);
                    p.add_term(OT, -c * a);
                    p.add_term(T, -c * b);
                }
                let shift = n as i64 + if n % 2 == 1 { 1 } else { 0 };
                p.add_term(T, -shift);
            }
            p
        }
        Label::TypeB(x, s) => PresentationElement::from_mono(F(x, s), 1),
        Label::TypeA(x, s) => {
            // [A_x(s)] = o f_{x,s} - s t
            let mut p = PresentationElement::from_mono(OF(x, s), 1);
            p.add_term(T, -(s as i64));
            p
        }
    }
}

/// Linear extension of the basis change to Green elements.
pub fn to_presentation(g: &GreenElement) -> PresentationElement {
    let mut out = PresentationElement::zero();
    for (&l, &c) in g.iter() {
        out = out.add(&label_to_presentation(l).scaled(c));
    }
    out
}

/// One mismatch found by [`verify_presentation`].
#[derive(Debug, Clone)]
pub struct PresentationMismatch {
    pub left: GreenElement,
    pub right: GreenElement,
    pub via_presentation: PresentationElement,
    pub via_fusion: PresentationElement,
}

/// Report of a presentation-consistency run.
#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub checked: usize,
    pub mismatches: Vec<PresentationMismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// For each pair (u, v): the product of the images in the presentation must
/// match the image of the fused product.
pub fn verify_presentation(pairs: &[(GreenElement, GreenElement)]) -> VerifyReport {
    let mut report = VerifyReport::default();
    for (u, v) in pairs {
        let lhs = pe_multiply(&to_presentation(u), &to_presentation(v));
        let rhs = to_presentation(&multiply(u, v));
        report.checked += 1;
        if lhs != rhs {
            report.mismatches.push(PresentationMismatch {
                left: u.clone(),
                right: v.clone(),
                via_presentation: lhs,
                via_fusion: rhs,
            });
        }
    }
    report
}

/// An element of the integral group ring of C2 x Z, supporting the image of
/// the semisimplification functor; keys are (i, s) for x^i z^s.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedGroupElement {
    terms: BTreeMap<(u8, i64), i64>,
}

impl GradedGroupElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, key: (u8, i64), c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(key).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u8, i64), &i64)> {
        self.terms.iter()
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i, s), &c) in self.iter() {
            for (&(j, t), &d) in other.iter() {
                out.add_term(((i + j) % 2, s + t), c * d);
            }
        }
        out
    }
}

impl std::fmt::Display for GradedGroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(i, s), &c) in self.iter() {
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
                first = false;
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let a = c.abs();
            let mut sym = String::new();
            if i == 1 {
                sym.push('x');
            }
            if s != 0 {
                if !sym.is_empty() {
                    sym.push('*');
                }
                if s == 1 {
                    sym.push('z');
                } else {
                    sym.push_str(&format!("z^{s}"));
                }
            }
            if sym.is_empty() {
                write!(f, "{a}")?;
            } else if a == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{a} {sym}")?;
            }
        }
        Ok(())
    }
}

/// The semisimplification functor on the Green ring: simples and
/// (co)syzygies survive as graded lines x^i z^s; projectives and the
/// even-dimensional (r,r)-type modules have quantum dimension zero and die.
pub fn semisimplify(g: &GreenElement) -> GradedGroupElement {
    let mut out = GradedGroupElement::zero();
    for (&l, &c) in g.iter() {
        match l {
            Label::Simple(i) => out.add_term((i % 2, 0), c),
            Label::Syzygy(s, i) => out.add_term((i % 2, s), c),
            Label::Projective(_) | Label::TypeA(..) | Label::TypeB(..) => {}
        }
    }
    out
}
