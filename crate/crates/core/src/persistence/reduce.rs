use super::BoundaryMatrix;

const NONE: u32 = u32::MAX;

/// Birth/death column pairs plus the births of classes that never die.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pairing {
    pairs: Vec<(usize, usize)>,
    essential: Vec<usize>,
}

impl Pairing {
    pub(crate) fn from_parts(mut pairs: Vec<(usize, usize)>, mut essential: Vec<usize>) -> Self {
        pairs.sort_unstable();
        essential.sort_unstable();
        Self { pairs, essential }
    }

    /// `(birth, death)` column pairs sorted by birth.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Unpaired positive columns, sorted.
    pub fn essential(&self) -> &[usize] {
        &self.essential
    }

    /// The part of the pairing describing homology in degrees `0..=max_degree`.
    pub fn up_to_degree(&self, matrix: &BoundaryMatrix, max_degree: usize) -> Self {
        Self {
            pairs: self
                .pairs
                .iter()
                .copied()
                .filter(|&(b, _)| matrix.dim(b) <= max_degree)
                .collect(),
            essential: self
                .essential
                .iter()
                .copied()
                .filter(|&b| matrix.dim(b) <= max_degree)
                .collect(),
        }
    }
}

/// `acc += other` over Z/2 for sorted index lists.
fn add_into(acc: &mut Vec<u32>, other: &[u32], scratch: &mut Vec<u32>) {
    scratch.clear();
    let (mut i, mut j) = (0, 0);
    while i < acc.len() && j < other.len() {
        match acc[i].cmp(&other[j]) {
            std::cmp::Ordering::Less => {
                scratch.push(acc[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                scratch.push(other[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    scratch.extend_from_slice(&acc[i..]);
    scratch.extend_from_slice(&other[j..]);
    std::mem::swap(acc, scratch);
}

/// Textbook reduction: columns left to right, adding earlier columns with
/// the same lowest row until lowest rows are distinct.
pub fn reduce_naive(matrix: &BoundaryMatrix) -> Pairing {
    let n = matrix.len();
    let mut owner = vec![NONE; n];
    let mut columns: Vec<Vec<u32>> = Vec::with_capacity(n);
    let mut scratch = Vec::new();
    for j in 0..n {
        let mut col = matrix.column(j).to_vec();
        while let Some(&low) = col.last() {
            match owner[low as usize] {
                NONE => {
                    owner[low as usize] = j as u32;
                    break;
                }
                k => add_into(&mut col, &columns[k as usize], &mut scratch),
            }
        }
        columns.push(col);
    }
    collect_homology(&owner, |j| columns[j].is_empty())
}

/// Reduction with clearing: dimensions top-down, and a column whose simplex
/// is already known to be a lowest row is zeroed without work.
pub fn reduce(matrix: &BoundaryMatrix) -> Pairing {
    let n = matrix.len();
    let mut owner = vec![NONE; n];
    let mut columns: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut scratch = Vec::new();
    for d in (1..=matrix.max_dim()).rev() {
        for j in (0..n).filter(|&j| matrix.dim(j) == d) {
            if owner[j] != NONE {
                continue;
            }
            let mut col = matrix.column(j).to_vec();
            while let Some(&low) = col.last() {
                match owner[low as usize] {
                    NONE => {
                        owner[low as usize] = j as u32;
                        break;
                    }
                    k => add_into(&mut col, &columns[k as usize], &mut scratch),
                }
            }
            columns[j] = col;
        }
    }
    collect_homology(&owner, |j| columns[j].is_empty())
}

fn collect_homology(owner: &[u32], is_zero: impl Fn(usize) -> bool) -> Pairing {
    let mut pairs = Vec::new();
    let mut essential = Vec::new();
    for (low, &j) in owner.iter().enumerate() {
        if j != NONE {
            pairs.push((low, j as usize));
        } else if is_zero(low) {
            essential.push(low);
        }
    }
    Pairing::from_parts(pairs, essential)
}

/// Pairing for homology in degrees `0..=max_degree` by reducing coboundaries.
///
/// Degree 0 is a union-find over edges (the older component survives).
/// Degree `d > 0` reduces the coboundary of each `d`-simplex, latest first,
/// with the earliest cofacet as pivot; simplices that killed a class in
/// degree `d - 1` are skipped.
pub fn cohomology_pairing(matrix: &BoundaryMatrix, max_degree: usize) -> Pairing {
    let n = matrix.len();
    let mut pairs = Vec::new();
    let mut essential = Vec::new();
    // Positions that are deaths in the degree just processed.
    let mut killer = vec![false; n];

    let mut parent: Vec<u32> = (0..n as u32).collect();
    for j in 0..n {
        if matrix.dim(j) != 1 {
            continue;
        }
        let col = matrix.column(j);
        let a = find(&mut parent, col[0]);
        let b = find(&mut parent, col[1]);
        if a != b {
            let (old, young) = if a < b { (a, b) } else { (b, a) };
            parent[young as usize] = old;
            pairs.push((young as usize, j));
            killer[j] = true;
        }
    }
    for v in 0..n {
        if matrix.dim(v) == 0 && find(&mut parent, v as u32) == v as u32 {
            essential.push(v);
        }
    }
    drop(parent);

    if max_degree > 0 {
        let (offsets, cofacets) = matrix.cofacets(1, max_degree);
        let mut owner = vec![NONE; n];
        let mut reduced: Vec<Vec<u32>> = Vec::new();
        let mut scratch = Vec::new();
        for d in 1..=max_degree {
            let mut next_killer = vec![false; n];
            for j in (0..n).rev() {
                if matrix.dim(j) != d || killer[j] {
                    continue;
                }
                let mut col = cofacets[offsets[j]..offsets[j + 1]].to_vec();
                while let Some(&pivot) = col.first() {
                    match owner[pivot as usize] {
                        NONE => {
                            owner[pivot as usize] = reduced.len() as u32;
                            pairs.push((j, pivot as usize));
                            next_killer[pivot as usize] = true;
                            break;
                        }
                        k => add_into(&mut col, &reduced[k as usize], &mut scratch),
                    }
                }
                if col.is_empty() {
                    essential.push(j);
                } else {
                    reduced.push(col);
                }
            }
            killer = next_killer;
        }
    }
    Pairing::from_parts(pairs, essential)
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}
