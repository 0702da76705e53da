//! Buchberger engine with optional cofactor tracking, plus the ideal-theoretic
//! operations built on it: normal forms, elimination, saturation, radical
//! membership, dimension/height, ideal equality, and an independent
//! linear-algebra membership oracle.
//!
//! Everything here is deterministic: pair selection follows the normal
//! strategy (degree of the lcm, then the lcm itself, then the pair indices),
//! reducers are chosen by basis position, and the final basis is the reduced
//! Groebner basis sorted by leading monomial.

use crate::error::{Error, Result};
use crate::order::TermOrder;
use crate::poly::{mono_coprime, mono_div, mono_lcm, mono_total_deg, Expo, Polynomial};
use crate::scalar::{Scalar, ScalarDomain};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// A reduced Groebner basis. With tracking on, `cofactors[i]` expresses
/// `gens[i]` as a combination of the input generators.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub gens: Vec<Polynomial>,
    pub order: TermOrder,
    pub cofactors: Option<Vec<Vec<Polynomial>>>,
    pub input: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn is_unit_ideal(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        normal_form(p, self).is_zero()
    }
}

fn leading_term(p: &Polynomial, order: &TermOrder) -> Option<(Expo, Scalar)> {
    p.terms()
        .max_by(|(a, _), (b, _)| order.cmp_mono(a, b))
        .map(|(e, c)| (e.clone(), c.clone()))
}

struct Row {
    poly: Polynomial,
    lt: Expo,
    lc: Scalar,
    cof: Option<Vec<Polynomial>>,
}

impl Row {
    fn new(poly: Polynomial, order: &TermOrder, cof: Option<Vec<Polynomial>>) -> Option<Row> {
        let (lt, lc) = leading_term(&poly, order)?;
        Some(Row { poly, lt, lc, cof })
    }

    fn make_monic(&mut self) {
        if self.lc.is_one() {
            return;
        }
        let inv = self.lc.inv().expect("nonzero leading coefficient");
        self.poly = self.poly.mul_scalar(&inv);
        if let Some(cof) = &mut self.cof {
            for q in cof.iter_mut() {
                *q = q.mul_scalar(&inv);
            }
        }
        self.lc = Scalar::one(self.poly.domain());
    }
}

/// Full reduction of `p` by the rows: returns the normal form, and with
/// tracking the quotients against each row.
fn reduce_full(
    p: &Polynomial,
    rows: &[Row],
    order: &TermOrder,
    track: bool,
) -> (Polynomial, Option<Vec<Polynomial>>) {
    let nvars = p.nvars();
    let domain = p.domain();
    let mut rem = p.clone();
    let mut out = Polynomial::zero(nvars, domain);
    let mut quot = if track {
        Some(vec![Polynomial::zero(nvars, domain); rows.len()])
    } else {
        None
    };
    'outer: while !rem.is_zero() {
        let (lt, lc) = leading_term(&rem, order).unwrap();
        for (k, row) in rows.iter().enumerate() {
            if let Some(m) = mono_div(&lt, &row.lt) {
                let c = lc.div(&row.lc).expect("leading coefficient unit");
                rem = rem.sub(&row.poly.mul_monomial(&m, &c));
                if let Some(q) = &mut quot {
                    q[k].add_term(&m, &c);
                }
                continue 'outer;
            }
        }
        // head term irreducible: move it to the output
        out.add_term(&lt, &lc);
        rem.add_term(&lt, &lc.neg());
    }
    (out, quot)
}

/// Deterministic Buchberger with inter-reduction. Returns the reduced basis.
pub fn buchberger(gens: &[Polynomial], order: &TermOrder, track: bool) -> GroebnerBasis {
    let input: Vec<Polynomial> = gens.to_vec();
    let nvars = gens.iter().map(|g| g.nvars()).max().unwrap_or(0);
    let domain = gens
        .iter()
        .map(|g| g.domain())
        .next()
        .unwrap_or(ScalarDomain::Q);

    let mut rows: Vec<Row> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let cof = track.then(|| unit_cofactor(gens.len(), i, nvars, domain));
        if let Some(mut row) = Row::new(g.clone(), order, cof) {
            row.make_monic();
            rows.push(row);
        }
    }

    let mut pairs: Vec<(u32, Expo, usize, usize)> = Vec::new();
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            push_pair(&mut pairs, &rows, i, j);
        }
    }

    while !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| cmp_pair(a, b, order))
            .map(|(idx, _)| idx)
            .unwrap();
        let (_, _, i, j) = pairs.swap_remove(best);

        if mono_coprime(&rows[i].lt, &rows[j].lt) {
            continue; // product criterion
        }
        let lcm = mono_lcm(&rows[i].lt, &rows[j].lt);
        let mi = mono_div(&lcm, &rows[i].lt).unwrap();
        let mj = mono_div(&lcm, &rows[j].lt).unwrap();
        let one = Scalar::one(domain);
        let s_poly = rows[i]
            .poly
            .mul_monomial(&mi, &one)
            .sub(&rows[j].poly.mul_monomial(&mj, &one));
        let s_cof = if track {
            let a = rows[i].cof.as_ref().unwrap();
            let b = rows[j].cof.as_ref().unwrap();
            Some(
                a.iter()
                    .zip(b)
                    .map(|(x, y)| x.mul_monomial(&mi, &one).sub(&y.mul_monomial(&mj, &one)))
                    .collect(),
            )
        } else {
            None
        };
        let (nf, quot) = reduce_full(&s_poly, &rows, order, track);
        if nf.is_zero() {
            continue;
        }
        let cof = if track {
            let mut c: Vec<Polynomial> = s_cof.unwrap();
            for (k, q) in quot.unwrap().iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                let rc = rows[k].cof.as_ref().unwrap().clone();
                for (x, y) in c.iter_mut().zip(rc.iter()) {
                    *x = x.sub(&q.mul(y));
                }
            }
            Some(c)
        } else {
            None
        };
        let mut row = Row::new(nf, order, cof).unwrap();
        row.make_monic();
        let new_idx = rows.len();
        rows.push(row);
        for i in 0..new_idx {
            push_pair(&mut pairs, &rows, i, new_idx);
        }
    }

    interreduce(&mut rows, order, track);

    rows.sort_by(|a, b| order.cmp_mono(&a.lt, &b.lt));
    let mut gens_out = Vec::with_capacity(rows.len());
    let mut cof_out = track.then(Vec::new);
    for row in rows {
        gens_out.push(row.poly);
        if let Some(c) = &mut cof_out {
            c.push(row.cof.unwrap());
        }
    }
    GroebnerBasis { gens: gens_out, order: order.clone(), cofactors: cof_out, input }
}

fn unit_cofactor(len: usize, i: usize, nvars: usize, domain: ScalarDomain) -> Vec<Polynomial> {
    let mut v = vec![Polynomial::zero(nvars, domain); len];
    v[i] = Polynomial::one(nvars, domain);
    v
}

fn push_pair(pairs: &mut Vec<(u32, Expo, usize, usize)>, rows: &[Row], i: usize, j: usize) {
    let lcm = mono_lcm(&rows[i].lt, &rows[j].lt);
    pairs.push((mono_total_deg(&lcm), lcm, i, j));
}

fn cmp_pair(
    a: &(u32, Expo, usize, usize),
    b: &(u32, Expo, usize, usize),
    order: &TermOrder,
) -> Ordering {
    a.0.cmp(&b.0)
        .then_with(|| order.cmp_mono(&a.1, &b.1))
        .then_with(|| (a.2, a.3).cmp(&(b.2, b.3)))
}

/// Minimalize and tail-reduce the basis in place.
fn interreduce(rows: &mut Vec<Row>, order: &TermOrder, track: bool) {
    // minimal basis: drop rows whose leading term is divisible by another's
    let mut keep: Vec<bool> = vec![true; rows.len()];
    for i in 0..rows.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..rows.len() {
            if i == j || !keep[j] {
                continue;
            }
            if mono_div(&rows[i].lt, &rows[j].lt).is_some()
                && (rows[i].lt != rows[j].lt || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let mut kept: Vec<Row> = Vec::new();
    for (i, row) in rows.drain(..).enumerate() {
        if keep[i] {
            kept.push(row);
        }
    }
    // tail-reduce each element against the others
    for i in 0..kept.len() {
        let mut others: Vec<&Row> = Vec::new();
        for (j, r) in kept.iter().enumerate() {
            if j != i {
                others.push(r);
            }
        }
        let others_owned: Vec<Row> = others
            .iter()
            .map(|r| Row {
                poly: r.poly.clone(),
                lt: r.lt.clone(),
                lc: r.lc.clone(),
                cof: r.cof.clone(),
            })
            .collect();
        let (nf, quot) = reduce_full(&kept[i].poly, &others_owned, order, track);
        if nf == kept[i].poly {
            continue;
        }
        let cof = if track {
            let mut c = kept[i].cof.clone().unwrap();
            for (k, q) in quot.unwrap().iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                let rc = others_owned[k].cof.as_ref().unwrap();
                for (x, y) in c.iter_mut().zip(rc.iter()) {
                    *x = x.sub(&q.mul(y));
                }
            }
            Some(c)
        } else {
            None
        };
        let mut row = Row::new(nf, order, cof).expect("tail reduction never kills the head");
        row.make_monic();
        kept[i] = row;
    }
    *rows = kept;
}

/// Normal form of `p` with respect to a reduced basis.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    normal_form_tracked(p, gb).0
}

/// Normal form plus quotients: `p = sum q_i * gens_i + nf`.
pub fn normal_form_tracked(p: &Polynomial, gb: &GroebnerBasis) -> (Polynomial, Vec<Polynomial>) {
    let rows: Vec<Row> = gb
        .gens
        .iter()
        .filter_map(|g| Row::new(g.clone(), &gb.order, None))
        .collect();
    let (nf, quot) = reduce_full(p, &rows, &gb.order, true);
    (nf, quot.unwrap())
}

/// Membership certificate over the basis *input* generators. Requires a
/// tracked basis.
pub fn member_certificate(p: &Polynomial, gb: &GroebnerBasis) -> Option<Vec<Polynomial>> {
    let (nf, quot) = normal_form_tracked(p, gb);
    if !nf.is_zero() {
        return None;
    }
    let cof = gb.cofactors.as_ref().expect("cofactor tracking required");
    let nvars = p.nvars();
    let domain = p.domain();
    let mut out = vec![Polynomial::zero(nvars, domain); gb.input.len()];
    for (q, row_cof) in quot.iter().zip(cof.iter()) {
        if q.is_zero() {
            continue;
        }
        for (o, rc) in out.iter_mut().zip(row_cof.iter()) {
            *o = o.add(&q.mul(rc));
        }
    }
    Some(out)
}

/// Generators of the contraction `I ∩ k[keep]`, via a block elimination order.
pub fn eliminate(gens: &[Polynomial], keep: &[usize], nvars: usize) -> Vec<Polynomial> {
    let elim: Vec<usize> = (0..nvars).filter(|i| !keep.contains(i)).collect();
    if elim.is_empty() {
        let order = TermOrder::GrevLex;
        return buchberger(gens, &order, false).gens;
    }
    let order = TermOrder::eliminating(&elim, nvars);
    let gb = buchberger(gens, &order, false);
    gb.gens
        .into_iter()
        .filter(|g| g.support().iter().all(|v| keep.contains(v)))
        .collect()
}

/// Saturation `I : u^∞` by the extra-variable trick. The result is a
/// Groebner basis (grevlex over the original variables). With `track`,
/// each output generator carries cofactors over the extended input list
/// `[gens..., 1 - w*u]`, as polynomials in `nvars + 1` variables.
pub fn saturate(
    gens: &[Polynomial],
    u: &Polynomial,
    nvars: usize,
    track: bool,
) -> Vec<(Polynomial, Option<Vec<Polynomial>>)> {
    assert!(!u.is_zero(), "saturation at zero");
    let domain = u.domain();
    let w = nvars;
    let mut ext: Vec<Polynomial> = gens.iter().map(|g| g.extend_vars(1)).collect();
    let relation = Polynomial::one(nvars + 1, domain)
        .sub(&Polynomial::var(nvars + 1, domain, w).mul(&u.extend_vars(1)));
    ext.push(relation);
    let order = TermOrder::eliminating(&[w], nvars + 1);
    let gb = buchberger(&ext, &order, track);
    let mut out = Vec::new();
    for (i, g) in gb.gens.iter().enumerate() {
        if g.uses_var(w) {
            continue;
        }
        let cof = gb.cofactors.as_ref().map(|c| c[i].clone());
        out.push((g.truncate_vars(nvars), cof));
    }
    out
}

pub fn saturate_plain(gens: &[Polynomial], u: &Polynomial, nvars: usize) -> Vec<Polynomial> {
    saturate(gens, u, nvars, false).into_iter().map(|(g, _)| g).collect()
}

/// Rabinowitsch test: `p ∈ √I`.
pub fn radical_member(p: &Polynomial, gens: &[Polynomial], nvars: usize) -> bool {
    radical_member_certified(p, gens, nvars).is_some()
}

/// Radical membership with a power certificate: returns `(N, cofactors)`
/// such that `p^N = sum cofactors_i * gens_i`.
pub fn radical_member_certified(
    p: &Polynomial,
    gens: &[Polynomial],
    nvars: usize,
) -> Option<(u32, Vec<Polynomial>)> {
    let domain = p.domain();
    if p.is_zero() {
        return Some((1, vec![Polynomial::zero(nvars, domain); gens.len()]));
    }
    let w = nvars;
    let mut ext: Vec<Polynomial> = gens.iter().map(|g| g.extend_vars(1)).collect();
    let relation = Polynomial::one(nvars + 1, domain)
        .sub(&Polynomial::var(nvars + 1, domain, w).mul(&p.extend_vars(1)));
    ext.push(relation);
    let gb = buchberger(&ext, &TermOrder::GrevLex, true);
    let one = Polynomial::one(nvars + 1, domain);
    let cof = member_certificate(&one, &gb)?;
    // 1 = sum q_i(w) g_i + q_last(w) (1 - w p); substitute w = 1/p and clear
    // denominators: p^N = sum (p^N q_i(1/p)) g_i with N the max w-degree.
    let n = cof.iter().map(|q| q.deg_in(w)).max().unwrap_or(0);
    let mut out = Vec::with_capacity(gens.len());
    for q in cof.iter().take(gens.len()) {
        let mut acc = Polynomial::zero(nvars, domain);
        for (e, c) in q.terms() {
            let k = e[w];
            let base = Polynomial::monomial(nvars, e[..nvars].to_vec(), c.clone());
            acc = acc.add(&base.mul(&p.pow(n - k)));
        }
        out.push(acc);
    }
    // sanity: the certificate replays
    debug_assert_eq!(
        p.pow(n),
        out.iter()
            .zip(gens)
            .fold(Polynomial::zero(nvars, domain), |a, (q, g)| a.add(&q.mul(g)))
    );
    Some((n, out))
}

/// Krull dimension of `S/I` via maximal independent variable sets of the
/// leading-term ideal, and the height `nvars - dim`.
pub fn dimension_height(gens: &[Polynomial], nvars: usize) -> Result<(usize, usize)> {
    let gb = buchberger(gens, &TermOrder::GrevLex, false);
    if gb.is_unit_ideal() {
        return Err(Error::ImproperIdeal);
    }
    let lts: Vec<Expo> = gb
        .gens
        .iter()
        .filter_map(|g| leading_term(g, &gb.order).map(|(e, _)| e))
        .collect();
    let mut best = 0usize;
    for mask in 0u64..(1u64 << nvars) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let independent = lts.iter().all(|e| {
            (0..nvars).any(|v| e[v] > 0 && (mask >> v) & 1 == 0)
        });
        if independent {
            best = size;
        }
    }
    Ok((best, nvars - best))
}

/// Mutual-membership test for equality of ideals.
pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial], order: &TermOrder) -> bool {
    let gb_a = buchberger(a, order, false);
    let gb_b = buchberger(b, order, false);
    b.iter().all(|g| gb_a.contains(g)) && a.iter().all(|g| gb_b.contains(g))
}

/// Independent membership oracle: solve `p = sum q_i * gens_i` with
/// `deg q_i <= degree_bound` by exact Gaussian elimination. `Some(q)` means
/// membership with witness; `None` means the bound was insufficient (the
/// oracle never asserts non-membership).
pub fn oracle_member(
    p: &Polynomial,
    gens: &[Polynomial],
    degree_bound: u32,
    nvars: usize,
) -> Option<Vec<Polynomial>> {
    let domain = p.domain();
    let monos = monomials_up_to(nvars, degree_bound);
    let ncols: usize = monos.len() * gens.len();

    // rows: equation per monomial of sum q_i g_i  - p
    let mut row_index: BTreeMap<Expo, usize> = BTreeMap::new();
    let mut cols: Vec<BTreeMap<usize, Scalar>> = Vec::with_capacity(ncols);
    for g in gens {
        for m in &monos {
            let shifted = g.mul_monomial(m, &Scalar::one(domain));
            let mut col = BTreeMap::new();
            for (e, c) in shifted.terms() {
                let next = row_index.len();
                let r = *row_index.entry(e.clone()).or_insert(next);
                col.insert(r, c.clone());
            }
            cols.push(col);
        }
    }
    let mut rhs: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (e, c) in p.terms() {
        let next = row_index.len();
        let r = *row_index.entry(e.clone()).or_insert(next);
        rhs.insert(r, c.clone());
    }
    let nrows = row_index.len();

    // dense Gaussian elimination on the augmented system
    let zero = Scalar::zero(domain);
    let mut mat: Vec<Vec<Scalar>> = vec![vec![zero.clone(); ncols + 1]; nrows];
    for (j, col) in cols.iter().enumerate() {
        for (r, c) in col {
            mat[*r][j] = c.clone();
        }
    }
    for (r, c) in &rhs {
        mat[*r][ncols] = c.clone();
    }

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut row = 0usize;
    for col in 0..ncols {
        if row >= nrows {
            break;
        }
        let piv = (row..nrows).find(|&r| !mat[r][col].is_zero());
        let Some(piv) = piv else { continue };
        mat.swap(row, piv);
        let inv = mat[row][col].inv().unwrap();
        for j in col..=ncols {
            mat[row][j] = mat[row][j].mul(&inv);
        }
        for r in 0..nrows {
            if r != row && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for j in col..=ncols {
                    let delta = mat[row][j].mul(&factor);
                    mat[r][j] = mat[r][j].sub(&delta);
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    // consistency: no row of the form 0 = nonzero
    for r in 0..nrows {
        if mat[r][..ncols].iter().all(|c| c.is_zero()) && !mat[r][ncols].is_zero() {
            return None;
        }
    }
    // read a particular solution (free columns set to zero)
    let mut qs = vec![Polynomial::zero(nvars, domain); gens.len()];
    for (col, piv) in pivot_of_col.iter().enumerate() {
        if let Some(r) = piv {
            let val = mat[*r][ncols].clone();
            if !val.is_zero() {
                let gi = col / monos.len();
                let mi = col % monos.len();
                qs[gi].add_term(&monos[mi], &val);
            }
        }
    }
    // replay the witness before reporting membership
    let mut acc = Polynomial::zero(nvars, domain);
    for (q, g) in qs.iter().zip(gens) {
        acc = acc.add(&q.mul(g));
    }
    (acc == *p).then_some(qs)
}

fn monomials_up_to(nvars: usize, degree: u32) -> Vec<Expo> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fill_monomials(nvars, degree, 0, &mut cur, &mut out);
    out
}

fn fill_monomials(nvars: usize, rem: u32, at: usize, cur: &mut Expo, out: &mut Vec<Expo>) {
    if at == nvars {
        out.push(cur.clone());
        return;
    }
    for d in 0..=rem {
        cur[at] = d;
        fill_monomials(nvars, rem - d, at + 1, cur, out);
    }
    cur[at] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> ScalarDomain {
        ScalarDomain::Q
    }

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, q(), i)
    }

    #[test]
    fn already_reduced_pair() {
        // {x1, t} under lex stays itself
        let gens = vec![x(2, 0), x(2, 1)];
        let gb = buchberger(&gens, &TermOrder::Lex, false);
        assert_eq!(gb.gens.len(), 2);
        for g in &gb.gens {
            assert!(gens.contains(g));
        }
    }

    #[test]
    fn s_polynomial_discovers_unit() {
        // (x^2, x t - 1) contains x, hence 1
        let x1 = x(2, 0);
        let t = x(2, 1);
        let one = Polynomial::one(2, q());
        let gens = vec![x1.mul(&x1), x1.mul(&t).sub(&one)];
        let gb = buchberger(&gens, &TermOrder::GrevLex, false);
        assert!(gb.is_unit_ideal());
        assert_eq!(gb.gens, vec![one]);
    }

    #[test]
    fn single_generator_fixed() {
        let g = x(2, 1).sub(&x(2, 0).pow(2));
        for order in [TermOrder::Lex, TermOrder::GrevLex] {
            let gb = buchberger(&[g.clone()], &order, false);
            assert_eq!(gb.gens.len(), 1);
            // normalized monic; under either order the leading coeff of the
            // input is already a unit, so the element matches up to sign
            let h = &gb.gens[0];
            assert!(h == &g || h == &g.neg());
        }
    }

    #[test]
    fn normal_form_examples() {
        let x1 = x(2, 0);
        let gb = buchberger(&[x1.clone()], &TermOrder::GrevLex, false);
        assert!(normal_form(&x1.pow(2), &gb).is_zero());
        let one = Polynomial::one(2, q());
        assert_eq!(normal_form(&x1.add(&one), &gb), one);
        // substitution order: x2 ≡ x1^2, so x2^3 reduces to x1^6
        let x2 = x(2, 1);
        let order = TermOrder::eliminating(&[1], 2);
        let gb = buchberger(&[x2.sub(&x1.pow(2))], &order, false);
        assert_eq!(normal_form(&x2.pow(3), &gb), x1.pow(6));
    }

    #[test]
    fn tracked_cofactors_replay() {
        let x1 = x(2, 0);
        let t = x(2, 1);
        let one = Polynomial::one(2, q());
        let gens = vec![x1.pow(2), x1.mul(&t).sub(&one)];
        let gb = buchberger(&gens, &TermOrder::GrevLex, true);
        for (g, cof) in gb.gens.iter().zip(gb.cofactors.as_ref().unwrap()) {
            let mut acc = Polynomial::zero(2, q());
            for (c, inp) in cof.iter().zip(&gens) {
                acc = acc.add(&c.mul(inp));
            }
            assert_eq!(&acc, g);
        }
        let cert = member_certificate(&one, &gb).unwrap();
        let mut acc = Polynomial::zero(2, q());
        for (c, inp) in cert.iter().zip(&gens) {
            acc = acc.add(&c.mul(inp));
        }
        assert_eq!(acc, one);
    }

    #[test]
    fn elimination_classic() {
        // (x1 - t, x2 - t^2), keep {x1, x2} -> (x2 - x1^2)
        let n = 3;
        let x1 = x(n, 0);
        let x2 = x(n, 1);
        let t = x(n, 2);
        let gens = vec![x1.sub(&t), x2.sub(&t.pow(2))];
        let out = eliminate(&gens, &[0, 1], n);
        assert_eq!(out.len(), 1);
        let expect = x2.sub(&x1.pow(2));
        assert!(out[0] == expect || out[0] == expect.neg());
        // (x1 t - 1), keep {x1} -> (0)
        let out = eliminate(&[x1.mul(&t).sub(&Polynomial::one(n, q()))], &[0], n);
        assert!(out.is_empty());
    }

    #[test]
    fn saturation_examples() {
        let n = 2;
        let y1 = x(n, 0);
        let x1 = x(n, 1);
        // (y1 x1) : y1^inf = (x1)
        let sat = saturate_plain(&[y1.mul(&x1)], &y1, n);
        assert_eq!(sat, vec![x1.clone()]);
        // (x1^2) : x1^inf = (1)
        let sat = saturate_plain(&[x1.pow(2)], &x1, n);
        assert_eq!(sat, vec![Polynomial::one(n, q())]);
        // an ideal not meeting the saturating variable is unchanged
        let n = 3;
        let x1 = Polynomial::var(n, q(), 0);
        let x2 = Polynomial::var(n, q(), 1);
        let t = Polynomial::var(n, q(), 2);
        let g = x2.sub(&x1.pow(2));
        let sat = saturate_plain(&[g.clone()], &t, n);
        let gb_before = buchberger(&[g], &TermOrder::GrevLex, false).gens;
        assert_eq!(sat, gb_before);
    }

    #[test]
    fn radical_examples() {
        let n = 2;
        let x1 = x(n, 0);
        let x2 = x(n, 1);
        assert!(radical_member(&x1, &[x1.pow(2)], n));
        assert!(!radical_member(&x2, &[x1.clone()], n));
        let s = x1.add(&x2);
        let (pow, cof) = radical_member_certified(&s, &[s.pow(2)], n).unwrap();
        assert!(pow >= 2);
        let mut acc = Polynomial::zero(n, q());
        for (c, g) in cof.iter().zip([s.pow(2)].iter()) {
            acc = acc.add(&c.mul(g));
        }
        assert_eq!(acc, s.pow(pow));
    }

    #[test]
    fn dimension_examples() {
        let n = 2;
        let x1 = x(n, 0);
        let x2 = x(n, 1);
        assert_eq!(dimension_height(&[x1.clone()], n).unwrap(), (1, 1));
        assert_eq!(dimension_height(&[x1.clone(), x2.clone()], n).unwrap(), (0, 2));
        assert_eq!(dimension_height(&[x2.sub(&x1.pow(2))], n).unwrap(), (1, 1));
        assert!(matches!(
            dimension_height(&[Polynomial::one(n, q())], n),
            Err(Error::ImproperIdeal)
        ));
    }

    #[test]
    fn ideal_equality_examples() {
        let n = 2;
        let x1 = x(n, 0);
        let x2 = x(n, 1);
        assert!(ideal_equal(
            &[x1.clone(), x2.clone()],
            &[x1.add(&x2), x2.clone()],
            &TermOrder::GrevLex
        ));
        assert!(!ideal_equal(&[x1.pow(2)], &[x1.clone()], &TermOrder::GrevLex));
        // (t + x1^2, x1) = (t, x1) with t as second variable
        let t = x2.clone();
        assert!(ideal_equal(
            &[t.add(&x1.pow(2)), x1.clone()],
            &[t.clone(), x1.clone()],
            &TermOrder::GrevLex
        ));
    }

    #[test]
    fn oracle_examples() {
        let n = 2;
        let x1 = x(n, 0);
        let x2 = x(n, 1);
        assert!(oracle_member(&x1.pow(2), &[x1.clone()], 1, n).is_some());
        assert!(oracle_member(&Polynomial::one(n, q()), &[x1.clone()], 5, n).is_none());
        // x1^6 - x2^3 ∈ (x2 - x1^2) with telescoping cofactor of degree 4
        let g = x2.sub(&x1.pow(2));
        let p = x1.pow(6).sub(&x2.pow(3));
        let witness = oracle_member(&p, &[g.clone()], 4, n).unwrap();
        let acc = witness[0].mul(&g);
        assert_eq!(acc, p);
    }
}
