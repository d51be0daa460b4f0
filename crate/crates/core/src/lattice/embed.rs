use rayon::prelude::*;
use serde::Serialize;

use super::changemaker::{enumerate_changemakers, Changemaker};
use super::gram::{integer_rank, GramMatrix};
use crate::error::{domain, Result};

/// Vectors `v₁..v_n ∈ Z^{n+1}` realizing a Gram matrix inside `σ⊥`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub sigma: Changemaker,
    /// `vectors[i]` is the image of the `i`-th basis element of the Gram matrix.
    pub vectors: Vec<Vec<i64>>,
}

impl Embedding {
    /// Checks orthogonality to `σ`, exact Gram reproduction under `⟨x,y⟩ = −x·y`, and full rank.
    pub fn new(gram: &GramMatrix, sigma: Changemaker, vectors: Vec<Vec<i64>>) -> Result<Self> {
        let e = Embedding { sigma, vectors };
        e.verify(gram)?;
        Ok(e)
    }

    pub fn verify(&self, gram: &GramMatrix) -> Result<()> {
        let n = gram.rank();
        let s = self.sigma.entries();
        if self.vectors.len() != n || s.len() != n + 1 {
            return domain(format!("embedding of rank {n} needs {n} vectors in Z^{}", n + 1));
        }
        for (i, v) in self.vectors.iter().enumerate() {
            if v.len() != s.len() {
                return domain(format!("vector {i} has length {}, expected {}", v.len(), s.len()));
            }
            if dot(v, s) != 0 {
                return domain(format!("vector {i} is not orthogonal to sigma"));
            }
            for (j, w) in self.vectors.iter().enumerate() {
                if -dot(v, w) != gram.get(i, j) {
                    return domain(format!("pairing of vectors {i},{j} is {}, expected {}", -dot(v, w), gram.get(i, j)));
                }
            }
        }
        let mut all = self.vectors.clone();
        all.push(s.to_vec());
        if integer_rank(&all) != n + 1 {
            return domain("vectors together with sigma are not of full rank");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ObstructionOptions {
    /// Keep searching after the first witness (needed for uniqueness claims).
    pub all: bool,
    /// Quotient by the coordinate symmetries fixing `σ`. Turning this off is only useful for validation.
    pub symmetry_pruning: bool,
}

impl Default for ObstructionOptions {
    fn default() -> Self {
        ObstructionOptions { all: false, symmetry_pruning: true }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub changemakers: u64,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "witnesses", rename_all = "snake_case")]
pub enum ChangemakerVerdict {
    Obstructed,
    /// One embedding per admitting changemaker, in changemaker order. Holds only the first
    /// unless [`ObstructionOptions::all`] was set.
    Witness(Vec<Embedding>),
}

impl ChangemakerVerdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, ChangemakerVerdict::Obstructed)
    }
}

/// Complete search for an embedding of `gram` into `σ⊥ ⊂ −Z^{n+1}`, with symmetry pruning.
pub fn embed_in_complement(gram: &GramMatrix, sigma: &Changemaker) -> Result<Option<Embedding>> {
    Ok(search(gram, sigma, true)?.0)
}

/// Same as [`embed_in_complement`] but without any symmetry reduction.
pub fn embed_in_complement_naive(gram: &GramMatrix, sigma: &Changemaker) -> Result<Option<Embedding>> {
    Ok(search(gram, sigma, false)?.0)
}

/// Tries every changemaker of length `n+1` and norm `p`, in lexicographic order.
pub fn changemaker_obstruction(
    gram: &GramMatrix,
    p: i64,
    options: ObstructionOptions,
) -> Result<(ChangemakerVerdict, SearchStats)> {
    if p < 1 {
        return domain(format!("surgery coefficient magnitude must be positive, got {p}"));
    }
    let sigmas = enumerate_changemakers(gram.rank() + 1, p);
    let run = |sigma: &Changemaker| search(gram, sigma, options.symmetry_pruning);
    let mut stats = SearchStats::default();
    let mut found = Vec::new();
    // Fixed-size batches keep the reported stats independent of the thread count.
    for batch in sigmas.chunks(if options.all { usize::MAX } else { FIRST_WITNESS_BATCH }) {
        let results: Vec<_> = batch.par_iter().map(run).collect::<Result<_>>()?;
        for (e, nodes) in results {
            stats.changemakers += 1;
            stats.nodes += nodes;
            if let Some(e) = e {
                found.push(e);
                if !options.all {
                    break;
                }
            }
        }
        if !options.all && !found.is_empty() {
            break;
        }
    }
    let verdict = if found.is_empty() { ChangemakerVerdict::Obstructed } else { ChangemakerVerdict::Witness(found) };
    Ok((verdict, stats))
}

const FIRST_WITNESS_BATCH: usize = 32;

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Every `x ∈ Z^len` with `|x|² = norm` and `x·σ = 0`, lexicographically descending.
fn vectors_of_norm(sigma: &[i64], norm: i64) -> Vec<Vec<i64>> {
    // suffix[k] = Σ_{j>=k} σ_j², for the Cauchy-Schwarz bound on the remaining dot product
    let mut suffix = vec![0i64; sigma.len() + 1];
    for k in (0..sigma.len()).rev() {
        suffix[k] = suffix[k + 1] + sigma[k] * sigma[k];
    }
    let mut out = Vec::new();
    let mut x = vec![0i64; sigma.len()];
    fill(sigma, &suffix, 0, norm, 0, &mut x, &mut out);
    out
}

fn fill(sigma: &[i64], suffix: &[i64], k: usize, rest: i64, partial: i64, x: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if k == sigma.len() {
        if rest == 0 && partial == 0 {
            out.push(x.clone());
        }
        return;
    }
    // (x·σ restricted to the tail)² <= |tail x|² · |tail σ|²
    if (partial as i128) * (partial as i128) > (rest as i128) * (suffix[k] as i128) {
        return;
    }
    let bound = isqrt(rest);
    for v in (-bound..=bound).rev() {
        x[k] = v;
        fill(sigma, suffix, k + 1, rest - v * v, partial + v * sigma[k], x, out);
    }
    x[k] = 0;
}

fn isqrt(n: i64) -> i64 {
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

struct Search<'a> {
    /// Positive-definite target in search order.
    target: Vec<Vec<i64>>,
    /// Candidate pool per distinct norm; `pool_of[pos]` indexes into it.
    pools: Vec<Vec<Vec<i64>>>,
    pool_of: Vec<usize>,
    sigma: &'a [i64],
    prune: bool,
    nodes: u64,
}

/// Coordinate classes whose permutations (and, when sign-free, sign changes) fix `σ` and every
/// vector chosen so far. They are contiguous because chosen entries are non-increasing on each class.
#[derive(Clone)]
struct Cells {
    id: Vec<u32>,
    sign_free: Vec<bool>,
}

impl Cells {
    fn initial(sigma: &[i64]) -> Self {
        let mut id = vec![0u32; sigma.len()];
        for j in 1..sigma.len() {
            id[j] = id[j - 1] + u32::from(sigma[j] != sigma[j - 1]);
        }
        Cells { id, sign_free: sigma.iter().map(|&s| s == 0).collect() }
    }

    fn admits(&self, x: &[i64]) -> bool {
        for j in 0..x.len() {
            if self.sign_free[j] && x[j] < 0 {
                return false;
            }
            if j + 1 < x.len() && self.id[j] == self.id[j + 1] && x[j] < x[j + 1] {
                return false;
            }
        }
        true
    }

    fn refine(&self, x: &[i64]) -> Self {
        let mut id = vec![0u32; x.len()];
        for j in 1..x.len() {
            id[j] = id[j - 1] + u32::from(self.id[j] != self.id[j - 1] || x[j] != x[j - 1]);
        }
        let sign_free = self.sign_free.iter().zip(x).map(|(&f, &v)| f && v == 0).collect();
        Cells { id, sign_free }
    }
}

fn search(gram: &GramMatrix, sigma: &Changemaker, prune: bool) -> Result<(Option<Embedding>, u64)> {
    let n = gram.rank();
    if sigma.len() != n + 1 {
        return domain(format!("a rank {n} Gram matrix needs a changemaker of length {}, got {}", n + 1, sigma.len()));
    }
    let positive = gram.negated();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (positive[i][i], i));
    let target: Vec<Vec<i64>> = order.iter().map(|&i| order.iter().map(|&j| positive[i][j]).collect()).collect();

    let mut norms: Vec<i64> = Vec::new();
    let mut pool_of = Vec::with_capacity(n);
    for k in 0..n {
        let d = target[k][k];
        let idx = norms.iter().position(|&x| x == d).unwrap_or_else(|| {
            norms.push(d);
            norms.len() - 1
        });
        pool_of.push(idx);
    }
    let pools: Vec<Vec<Vec<i64>>> = norms.iter().map(|&d| vectors_of_norm(sigma.entries(), d)).collect();

    let mut s = Search { target, pools, pool_of, sigma: sigma.entries(), prune, nodes: 0 };
    // live[k]: candidates for position k consistent with every vector chosen so far
    let live: Vec<Vec<u32>> = (0..n).map(|k| (0..s.pools[s.pool_of[k]].len() as u32).collect()).collect();
    let mut chosen: Vec<u32> = Vec::with_capacity(n);
    let found = s.descend(&live, &mut chosen, &Cells::initial(sigma.entries()));
    let nodes = s.nodes;
    let Some(found) = found else { return Ok((None, nodes)) };

    let mut vectors = vec![Vec::new(); n];
    for (pos, &c) in found.iter().enumerate() {
        vectors[order[pos]] = s.pools[s.pool_of[pos]][c as usize].clone();
    }
    // Re-verified from scratch so a search bug can never produce a false witness.
    let e = Embedding::new(gram, sigma.clone(), vectors)?;
    Ok((Some(e), nodes))
}

impl Search<'_> {
    fn candidate(&self, pos: usize, c: u32) -> &[i64] {
        &self.pools[self.pool_of[pos]][c as usize]
    }

    fn descend(&mut self, live: &[Vec<u32>], chosen: &mut Vec<u32>, cells: &Cells) -> Option<Vec<u32>> {
        let pos = chosen.len();
        if pos == self.target.len() {
            let mut all: Vec<Vec<i64>> = chosen.iter().enumerate().map(|(k, &c)| self.candidate(k, c).to_vec()).collect();
            all.push(self.sigma.to_vec());
            return (integer_rank(&all) == all.len()).then(|| chosen.clone());
        }
        for &c in &live[pos] {
            self.nodes += 1;
            let x = self.candidate(pos, c).to_vec();
            if self.prune && !cells.admits(&x) {
                continue;
            }
            let mut next = Vec::with_capacity(live.len());
            let mut dead = false;
            for k in 0..live.len() {
                if k <= pos {
                    next.push(Vec::new());
                    continue;
                }
                let want = self.target[k][pos];
                let filtered: Vec<u32> = live[k].iter().copied().filter(|&d| dot(self.candidate(k, d), &x) == want).collect();
                if filtered.is_empty() {
                    dead = true;
                    break;
                }
                next.push(filtered);
            }
            if dead {
                continue;
            }
            chosen.push(c);
            let refined = if self.prune { cells.refine(&x) } else { cells.clone() };
            if let Some(found) = self.descend(&next, chosen, &refined) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cm(v: &[i64]) -> Changemaker {
        Changemaker::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rank_one_example() {
        let g = GramMatrix::new(vec![vec![-1]]).unwrap();
        let e = embed_in_complement(&g, &cm(&[0, 1])).unwrap().unwrap();
        assert_eq!(e.vectors, vec![vec![1, 0]]);
        assert!(embed_in_complement(&g, &cm(&[1, 1])).unwrap().is_none());
        assert!(embed_in_complement(&g, &cm(&[1])).is_err());
    }

    #[test]
    fn norm_pool_is_exact() {
        let sigma = [1, 1, 2];
        let pool = vectors_of_norm(&sigma, 6);
        let mut brute = Vec::new();
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                for c in -3i64..=3 {
                    if a * a + b * b + c * c == 6 && a + b + 2 * c == 0 {
                        brute.push(vec![a, b, c]);
                    }
                }
            }
        }
        brute.sort();
        brute.reverse();
        assert_eq!(pool, brute);
    }

    #[test]
    fn a2_root_lattice() {
        // −A₂ sits in (1,1,1)⊥ but not in (0,1,1)⊥
        let g = GramMatrix::new(vec![vec![-2, 1], vec![1, -2]]).unwrap();
        assert!(embed_in_complement(&g, &cm(&[1, 1, 1])).unwrap().is_some());
        assert!(embed_in_complement(&g, &cm(&[0, 1, 1])).unwrap().is_none());
        let (v, stats) = changemaker_obstruction(&g, 3, ObstructionOptions::default()).unwrap();
        assert_eq!(v, ChangemakerVerdict::Witness(vec![embed_in_complement(&g, &cm(&[1, 1, 1])).unwrap().unwrap()]));
        assert_eq!(stats.changemakers, 1);
    }

    #[test]
    fn verify_rejects_bad_vectors() {
        let g = GramMatrix::new(vec![vec![-1]]).unwrap();
        assert!(Embedding::new(&g, cm(&[0, 1]), vec![vec![0, 1]]).is_err());
        assert!(Embedding::new(&g, cm(&[0, 1]), vec![vec![-1, 0]]).is_ok());
    }
}
