//! Brute-force reference implementations, written straight from the
//! definitions on raw bitmasks. Only `size()` and `related()` are taken from
//! the library.

#![allow(dead_code, clippy::needless_range_loop)]

use lcd_rough::ToleranceSpace;

pub fn members(m: u64) -> Vec<usize> {
    (0..64).filter(|i| m >> i & 1 == 1).collect()
}

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn nbhd(s: &ToleranceSpace, x: usize) -> u64 {
    (0..s.size()).filter(|&y| s.related(x, y)).fold(0, |m, y| m | 1 << y)
}

fn clique(s: &ToleranceSpace, a: u64) -> bool {
    let v = members(a);
    v.iter().all(|&x| v.iter().all(|&y| s.related(x, y)))
}

/// All maximal cliques by subset enumeration, ordered by sorted member list.
pub fn blocks(s: &ToleranceSpace) -> Vec<u64> {
    let n = s.size();
    let mut out: Vec<u64> = (1..=full(n))
        .filter(|&a| clique(s, a))
        .filter(|&a| (0..n).all(|x| a >> x & 1 == 1 || !clique(s, a | 1 << x)))
        .collect();
    out.sort_by_key(|&b| members(b));
    out
}

fn union(bs: &[u64], c: &[usize]) -> u64 {
    c.iter().fold(0, |m, &i| m | bs[i])
}

fn disjoint(bs: &[u64], c: &[usize]) -> bool {
    c.iter()
        .enumerate()
        .all(|(k, &i)| c[k + 1..].iter().all(|&j| bs[i] & bs[j] == 0))
}

fn subcollections(pool: &[usize]) -> Vec<Vec<usize>> {
    (0u64..1 << pool.len())
        .map(|m| members(m).into_iter().map(|k| pool[k]).collect())
        .collect()
}

fn subset_of(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// Maximal disjoint subcollections of the blocks inside `a`.
pub fn lower_collections(bs: &[u64], a: u64) -> Vec<Vec<usize>> {
    let pool: Vec<usize> = (0..bs.len()).filter(|&i| bs[i] & !a == 0).collect();
    let dis: Vec<Vec<usize>> = subcollections(&pool).into_iter().filter(|c| disjoint(bs, c)).collect();
    let mut out: Vec<Vec<usize>> = dis
        .iter()
        .filter(|c| !dis.iter().any(|d| d.len() > c.len() && subset_of(c, d)))
        .cloned()
        .collect();
    out.sort();
    out
}

/// Minimal disjoint covers of `a` by blocks meeting `a`.
pub fn upper_collections(bs: &[u64], a: u64) -> Vec<Vec<usize>> {
    let pool: Vec<usize> = (0..bs.len()).filter(|&i| bs[i] & a != 0).collect();
    let covers: Vec<Vec<usize>> = subcollections(&pool)
        .into_iter()
        .filter(|c| disjoint(bs, c) && a & !union(bs, c) == 0)
        .collect();
    let mut out: Vec<Vec<usize>> = covers
        .iter()
        .filter(|c| !covers.iter().any(|d| d.len() < c.len() && subset_of(d, c)))
        .cloned()
        .collect();
    out.sort();
    out
}

fn preceq(bs: &[u64], e: &[usize], b: &[usize]) -> bool {
    e == b || (subset_of(e, b) && disjoint(bs, e))
}

/// The piecewise choice rule evaluated by enumerating every collection.
pub fn lambda(bs: &[u64], fam: &[Vec<usize>]) -> Vec<usize> {
    let all: Vec<usize> = (0..bs.len()).collect();
    let every = subcollections(&all);
    let same = |xs: Vec<Vec<usize>>| {
        let mut xs = xs;
        xs.sort();
        let mut f = fam.to_vec();
        f.sort();
        xs == f
    };
    for g in fam {
        if fam.iter().all(|x| preceq(bs, x, g))
            && same(every.iter().filter(|x| preceq(bs, x, g)).cloned().collect())
        {
            return g.clone();
        }
    }
    for m in fam {
        if fam.iter().all(|x| preceq(bs, m, x))
            && same(every.iter().filter(|x| preceq(bs, m, x)).cloned().collect())
        {
            return m.clone();
        }
    }
    fam.iter().min().unwrap().clone()
}

pub fn l0(s: &ToleranceSpace, a: u64) -> u64 {
    let bs = blocks(s);
    union(&bs, &lambda(&bs, &lower_collections(&bs, a)))
}

pub fn u0(s: &ToleranceSpace, a: u64, empty_defined: bool) -> Option<u64> {
    if a == 0 {
        return empty_defined.then_some(0);
    }
    let bs = blocks(s);
    let covers = upper_collections(&bs, a);
    if covers.is_empty() {
        return None;
    }
    Some(union(&bs, &lambda(&bs, &covers)))
}

pub fn lbreve(s: &ToleranceSpace, a: u64) -> u64 {
    blocks(s).into_iter().filter(|b| b & !a == 0).fold(0, |m, b| m | b)
}

pub fn ubreve(s: &ToleranceSpace, a: u64) -> u64 {
    blocks(s).into_iter().filter(|b| b & a != 0).fold(0, |m, b| m | b)
}

pub fn lower(s: &ToleranceSpace, a: u64) -> u64 {
    (0..s.size()).map(|x| nbhd(s, x)).filter(|nx| nx & !a == 0).fold(0, |m, nx| m | nx)
}

pub fn upper(s: &ToleranceSpace, a: u64) -> u64 {
    members(a).into_iter().map(|x| nbhd(s, x)).filter(|nx| nx & a != 0).fold(0, |m, nx| m | nx)
}

pub fn lstar(s: &ToleranceSpace, a: u64) -> u64 {
    (0..s.size())
        .filter(|&x| members(nbhd(s, x)).into_iter().any(|y| nbhd(s, y) & !a == 0))
        .fold(0, |m, x| m | 1 << x)
}

pub fn ustar(s: &ToleranceSpace, a: u64) -> u64 {
    (0..s.size())
        .filter(|&x| members(nbhd(s, x)).into_iter().all(|y| nbhd(s, y) & a != 0))
        .fold(0, |m, x| m | 1 << x)
}

fn dom(s: &ToleranceSpace, z: usize) -> u64 {
    (0..s.size()).filter(|&x| nbhd(s, x) >> z & 1 == 1).fold(full(s.size()), |m, x| m & nbhd(s, x))
}

fn theta_class(s: &ToleranceSpace, x: usize) -> u64 {
    (0..s.size()).filter(|&y| dom(s, y) == dom(s, x)).fold(0, |m, y| m | 1 << y)
}

pub fn ltheta(s: &ToleranceSpace, a: u64) -> u64 {
    (0..s.size()).filter(|&x| theta_class(s, x) & !a == 0).fold(0, |m, x| m | 1 << x)
}

pub fn utheta(s: &ToleranceSpace, a: u64) -> u64 {
    (0..s.size()).filter(|&x| theta_class(s, x) & a != 0).fold(0, |m, x| m | 1 << x)
}

/// Every space on `1..=max_n` points, as `(n, pairs)`.
pub fn all_spaces(max_n: usize) -> Vec<ToleranceSpace> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for code in 0u64..1 << slots.len() {
            let pairs: Vec<(usize, usize)> = members(code).into_iter().map(|k| slots[k]).collect();
            out.push(ToleranceSpace::build(n, &pairs, true).unwrap());
        }
    }
    out
}

/// Maximal proper filters by enumerating every subset of the carrier.
/// `imp[i][j]` is the index of `c_i ⇒ c_j` when that lies in the carrier.
pub fn maximal_filters(imp: &[Vec<Option<usize>>], top: usize) -> Vec<u64> {
    let m = imp.len();
    assert!(m <= 24, "subset enumeration over {m} elements");
    let fullm = full(m);
    let filters: Vec<u64> = (0..fullm).filter(|&f| is_filter(imp, top, f)).collect();
    let mut out: Vec<u64> = filters
        .iter()
        .copied()
        .filter(|&f| !filters.iter().any(|&g| g != f && f & !g == 0))
        .collect();
    out.sort();
    out
}

/// Contains the top and is closed under modus ponens (need not be proper).
pub fn is_filter(imp: &[Vec<Option<usize>>], top: usize, f: u64) -> bool {
    let m = imp.len();
    f >> top & 1 == 1
        && (0..m).all(|i| {
            f >> i & 1 == 0
                || (0..m).all(|j| match imp[i][j] {
                    Some(w) => f >> w & 1 == 0 || f >> j & 1 == 1,
                    None => true,
                })
        })
}

/// Least filter containing `seed`, by naive fixpoint.
pub fn closure(imp: &[Vec<Option<usize>>], top: usize, seed: u64) -> u64 {
    let m = imp.len();
    let mut f = seed | 1 << top;
    loop {
        let mut g = f;
        for i in members(f) {
            for j in 0..m {
                if let Some(w) = imp[i][j] {
                    if f >> w & 1 == 1 {
                        g |= 1 << j;
                    }
                }
            }
        }
        if g == f {
            return f;
        }
        f = g;
    }
}
