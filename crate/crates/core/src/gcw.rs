//! Equivariant CW complexes, stored as a fibre complex with a cellular
//! right action of the isotropy group.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::failure::{ensure, VerificationFailure};
use crate::group::{right_coset_labels, FiniteGroup};
use crate::orbitcat::{subgroup_label, OrbitCategory, Subgroup};
use crate::zlinalg::{homology_at, FgAbelianGroup, IntMatrix};

/// Complex tables by name. Cell names are unique across all dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawGcw {
    pub group: FiniteGroup,
    /// Cell names per dimension.
    pub cells: Vec<Vec<String>>,
    /// Boundary chain of each cell of positive dimension.
    pub boundary: Vec<(String, Vec<(String, BigInt)>)>,
    /// For each group element, the image of every cell, per dimension.
    pub action: Vec<(String, Vec<Vec<String>>)>,
    /// Optional declared stabilizer of every cell, by element names.
    pub orbit_types: Option<Vec<Vec<Vec<String>>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GcwViolation {
    DuplicateCell(String),
    UnknownCell(String),
    UnknownElement(String),
    WrongDimension {
        cell: String,
        face: String,
    },
    MissingAction {
        element: String,
    },
    NotAPermutation {
        element: String,
        dim: usize,
    },
    IdentityMoves {
        cell: String,
    },
    NotAnAction {
        cell: String,
        g: String,
        h: String,
    },
    BoundarySquare {
        cell: String,
    },
    NotEquivariant {
        element: String,
        cell: String,
    },
    Inadmissible {
        element: String,
        cell: String,
        face: String,
    },
    OrbitTypeMismatch {
        cell: String,
        declared: String,
        actual: String,
    },
}

impl GcwViolation {
    pub fn kind(&self) -> &'static str {
        use GcwViolation::*;
        match self {
            DuplicateCell(_) | UnknownCell(_) | UnknownElement(_) => "names",
            WrongDimension { .. } => "dimension",
            MissingAction { .. } | NotAPermutation { .. } | IdentityMoves { .. } => "action",
            NotAnAction { .. } => "action",
            BoundarySquare { .. } => "boundary-squared",
            NotEquivariant { .. } => "equivariance",
            Inadmissible { .. } => "admissibility",
            OrbitTypeMismatch { .. } => "orbit-type",
        }
    }

    pub fn witness(&self) -> Vec<String> {
        use GcwViolation::*;
        match self {
            DuplicateCell(c) | UnknownCell(c) | UnknownElement(c) => vec![c.clone()],
            WrongDimension { cell, face } => vec![cell.clone(), face.clone()],
            MissingAction { element } => vec![element.clone()],
            NotAPermutation { element, dim } => vec![element.clone(), format!("dim {dim}")],
            IdentityMoves { cell } | BoundarySquare { cell } => vec![cell.clone()],
            NotAnAction { cell, g, h } => vec![cell.clone(), g.clone(), h.clone()],
            NotEquivariant { element, cell } => vec![element.clone(), cell.clone()],
            Inadmissible { element, cell, face } => vec![element.clone(), cell.clone(), face.clone()],
            OrbitTypeMismatch { cell, declared, actual } => vec![cell.clone(), declared.clone(), actual.clone()],
        }
    }
}

impl fmt::Display for GcwViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violation at ({})", self.kind(), self.witness().join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcwError {
    #[error("invalid complex: {} violation(s), first: {}", .0.len(), .0[0])]
    Invalid(Vec<GcwViolation>),
    #[error("orbit category is over a different group")]
    GroupMismatch,
    #[error("cell orbit {cell}: stabilizer {orbit_type} does not fix face {face}")]
    Containment {
        cell: String,
        orbit_type: String,
        face: String,
    },
    #[error("cell orbit {0}: {1}")]
    BadLayer(String, String),
}

/// A validated complex. `boundary[n]` has rows the `(n-1)`-cells and
/// columns the `n`-cells; `boundary[0]` has no rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcwComplex {
    group: FiniteGroup,
    names: Vec<Vec<String>>,
    boundary: Vec<IntMatrix>,
    /// `action[g][n][σ] = σ·g`.
    action: Vec<Vec<Vec<usize>>>,
    stabilizers: Vec<Vec<Subgroup>>,
}

pub fn validate_gcw(raw: &RawGcw) -> Result<GcwComplex, GcwError> {
    use GcwViolation as V;
    let group = &raw.group;
    let mut out = Vec::new();
    let mut index: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for (n, cells) in raw.cells.iter().enumerate() {
        for (i, c) in cells.iter().enumerate() {
            if index.insert(c.as_str(), (n, i)).is_some() {
                out.push(V::DuplicateCell(c.clone()));
            }
        }
    }
    let dims = raw.cells.len();
    let mut boundary: Vec<IntMatrix> = (0..dims)
        .map(|n| {
            let rows = if n == 0 { 0 } else { raw.cells[n - 1].len() };
            IntMatrix::zeros(rows, raw.cells[n].len())
        })
        .collect();
    for (cell, chain) in &raw.boundary {
        let Some(&(n, i)) = index.get(cell.as_str()) else {
            out.push(V::UnknownCell(cell.clone()));
            continue;
        };
        for (face, k) in chain {
            match index.get(face.as_str()) {
                None => out.push(V::UnknownCell(face.clone())),
                Some(&(m, j)) if m + 1 == n => {
                    let cur = boundary[n].get(j, i).clone();
                    boundary[n].set(j, i, cur + k);
                }
                Some(_) => out.push(V::WrongDimension {
                    cell: cell.clone(),
                    face: face.clone(),
                }),
            }
        }
    }
    let mut action = vec![Vec::new(); group.order()];
    let mut seen = vec![false; group.order()];
    for (elt, images) in &raw.action {
        let Some(g) = group.element(elt) else {
            out.push(V::UnknownElement(elt.clone()));
            continue;
        };
        seen[g] = true;
        let mut perms = Vec::with_capacity(dims);
        for n in 0..dims {
            let imgs = images.get(n).map(Vec::as_slice).unwrap_or(&[]);
            let mut perm = Vec::with_capacity(imgs.len());
            for name in imgs {
                match index.get(name.as_str()) {
                    Some(&(m, j)) if m == n => perm.push(j),
                    Some(_) => out.push(V::WrongDimension {
                        cell: elt.clone(),
                        face: name.clone(),
                    }),
                    None => out.push(V::UnknownCell(name.clone())),
                }
            }
            let mut sorted = perm.clone();
            sorted.sort_unstable();
            if sorted != (0..raw.cells[n].len()).collect::<Vec<_>>() {
                out.push(V::NotAPermutation {
                    element: elt.clone(),
                    dim: n,
                });
            }
            perms.push(perm);
        }
        action[g] = perms;
    }
    for g in group.elements() {
        if !seen[g] {
            out.push(V::MissingAction {
                element: group.name(g).into(),
            });
        }
    }
    if !out.is_empty() {
        return Err(GcwError::Invalid(out));
    }
    let complex = GcwComplex {
        group: group.clone(),
        names: raw.cells.clone(),
        boundary,
        stabilizers: Vec::new(),
        action,
    };
    complex.finish(raw.orbit_types.as_ref())
}

impl GcwComplex {
    fn finish(mut self, declared: Option<&Vec<Vec<Vec<String>>>>) -> Result<Self, GcwError> {
        use GcwViolation as V;
        let mut out = Vec::new();
        let group = &self.group;
        let e = group.identity();
        for n in 0..self.dims() {
            for s in 0..self.cell_count(n) {
                let cn = || self.names[n][s].clone();
                if self.action[e][n][s] != s {
                    out.push(V::IdentityMoves { cell: cn() });
                }
                for g in group.elements() {
                    for h in group.elements() {
                        let lhs = self.action[h][n][self.action[g][n][s]];
                        if lhs != self.action[group.mul(g, h)][n][s] {
                            out.push(V::NotAnAction {
                                cell: cn(),
                                g: group.name(g).into(),
                                h: group.name(h).into(),
                            });
                        }
                    }
                }
            }
        }
        if !out.is_empty() {
            return Err(GcwError::Invalid(out));
        }
        for n in 1..self.dims() {
            // ∂∂ = 0
            if n >= 2 {
                let dd = &self.boundary[n - 1] * &self.boundary[n];
                for s in 0..self.cell_count(n) {
                    if dd.column(s).iter().any(|x| !x.is_zero()) {
                        out.push(V::BoundarySquare {
                            cell: self.names[n][s].clone(),
                        });
                    }
                }
            }
            // ∂(σ·g) = (∂σ)·g, entrywise
            for g in group.elements() {
                for s in 0..self.cell_count(n) {
                    let sg = self.action[g][n][s];
                    let ok = (0..self.cell_count(n - 1))
                        .all(|t| self.boundary[n].get(self.action[g][n - 1][t], sg) == self.boundary[n].get(t, s));
                    if !ok {
                        out.push(V::NotEquivariant {
                            element: group.name(g).into(),
                            cell: self.names[n][s].clone(),
                        });
                    }
                    if sg == s {
                        for t in 0..self.cell_count(n - 1) {
                            if !self.boundary[n].get(t, s).is_zero() && self.action[g][n - 1][t] != t {
                                out.push(V::Inadmissible {
                                    element: group.name(g).into(),
                                    cell: self.names[n][s].clone(),
                                    face: self.names[n - 1][t].clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
        self.stabilizers = (0..self.dims())
            .map(|n| {
                (0..self.cell_count(n))
                    .map(|s| Subgroup::from_elements(group.elements().filter(|&g| self.action[g][n][s] == s)))
                    .collect()
            })
            .collect();
        if let Some(declared) = declared {
            for n in 0..self.dims() {
                for s in 0..self.cell_count(n) {
                    let names = declared.get(n).and_then(|d| d.get(s));
                    let decl = names.map(|ns| {
                        ns.iter()
                            .map(|x| group.element(x).ok_or_else(|| x.clone()))
                            .collect::<Result<Vec<usize>, String>>()
                    });
                    let actual = &self.stabilizers[n][s];
                    match decl {
                        Some(Err(bad)) => out.push(V::UnknownElement(bad)),
                        Some(Ok(d)) if Subgroup::from_elements(d.iter().copied()) == *actual => {}
                        other => out.push(V::OrbitTypeMismatch {
                            cell: self.names[n][s].clone(),
                            declared: match other {
                                Some(Ok(d)) => subgroup_label(group, &Subgroup::from_elements(d)),
                                _ => String::from("(missing)"),
                            },
                            actual: subgroup_label(group, actual),
                        }),
                    }
                }
            }
        }
        if out.is_empty() {
            Ok(self)
        } else {
            Err(GcwError::Invalid(out))
        }
    }

    pub fn to_raw(&self) -> RawGcw {
        let mut boundary = Vec::new();
        for n in 1..self.dims() {
            for s in 0..self.cell_count(n) {
                let chain = (0..self.cell_count(n - 1))
                    .filter(|&t| !self.boundary[n].get(t, s).is_zero())
                    .map(|t| (self.names[n - 1][t].clone(), self.boundary[n].get(t, s).clone()))
                    .collect();
                boundary.push((self.names[n][s].clone(), chain));
            }
        }
        let action = self
            .group
            .elements()
            .map(|g| {
                let imgs = (0..self.dims())
                    .map(|n| self.action[g][n].iter().map(|&t| self.names[n][t].clone()).collect())
                    .collect();
                (self.group.name(g).to_string(), imgs)
            })
            .collect();
        let orbit_types = self
            .stabilizers
            .iter()
            .map(|cells| {
                cells
                    .iter()
                    .map(|s| s.names(&self.group).into_iter().map(String::from).collect())
                    .collect()
            })
            .collect();
        RawGcw {
            group: self.group.clone(),
            cells: self.names.clone(),
            boundary,
            action,
            orbit_types: Some(orbit_types),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Number of dimensions, one more than the top dimension.
    pub fn dims(&self) -> usize {
        self.names.len()
    }

    pub fn dimension(&self) -> usize {
        self.dims().saturating_sub(1)
    }

    pub fn cell_count(&self, n: usize) -> usize {
        self.names.get(n).map_or(0, Vec::len)
    }

    pub fn cell_names(&self, n: usize) -> &[String] {
        self.names.get(n).map_or(&[], Vec::as_slice)
    }

    /// `∂_n`; zero-sized outside the complex.
    pub fn boundary(&self, n: usize) -> IntMatrix {
        if n < self.dims() {
            self.boundary[n].clone()
        } else {
            IntMatrix::zeros(self.cell_count(n - 1), 0)
        }
    }

    /// `σ·g` for an `n`-cell.
    pub fn act(&self, n: usize, cell: usize, g: usize) -> usize {
        self.action[g][n][cell]
    }

    pub fn stabilizer(&self, n: usize, cell: usize) -> &Subgroup {
        &self.stabilizers[n][cell]
    }

    /// `n`-cells fixed by every element of `h`.
    pub fn fixed_cells(&self, n: usize, h: &Subgroup) -> Vec<usize> {
        (0..self.cell_count(n))
            .filter(|&s| h.is_subset_of(&self.stabilizers[n][s]))
            .collect()
    }

    /// Cell orbits in dimension `n`, each sorted, ordered by first cell.
    pub fn cell_orbits(&self, n: usize) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.cell_count(n)];
        let mut orbits = Vec::new();
        for s in 0..self.cell_count(n) {
            if seen[s] {
                continue;
            }
            let mut orbit: Vec<usize> = self.group.elements().map(|g| self.act(n, s, g)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &t in &orbit {
                seen[t] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }
}

/// An ordinary finite cell complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlainComplex {
    pub names: Vec<Vec<String>>,
    /// `boundary[n]`: rows `(n-1)`-cells, columns `n`-cells.
    pub boundary: Vec<IntMatrix>,
}

impl PlainComplex {
    pub fn dims(&self) -> usize {
        self.names.len()
    }

    pub fn cell_count(&self, n: usize) -> usize {
        self.names.get(n).map_or(0, Vec::len)
    }

    fn d(&self, n: usize) -> IntMatrix {
        if n < self.dims() {
            self.boundary[n].clone()
        } else {
            IntMatrix::zeros(self.cell_count(n.wrapping_sub(1)), 0)
        }
    }

    pub fn is_chain_complex(&self) -> bool {
        (2..self.dims()).all(|n| (&self.boundary[n - 1] * &self.boundary[n]).is_zero())
    }

    /// Cellular homology in degrees `0..dims()`.
    pub fn homology(&self) -> Vec<FgAbelianGroup> {
        (0..self.dims())
            .map(|n| homology_at(&self.d(n + 1), &self.d(n)).expect("chain complex"))
            .collect()
    }

    /// Cellular cohomology with integer coefficients in degrees `0..dims()`.
    pub fn cohomology(&self) -> Vec<FgAbelianGroup> {
        (0..self.dims())
            .map(|n| homology_at(&self.d(n).transpose(), &self.d(n + 1).transpose()).expect("cochain complex"))
            .collect()
    }
}

/// Cells fixed by `h`, with boundaries restricted. Fails if a fixed cell
/// has a non-fixed face.
pub fn fixed_subcomplex(x: &GcwComplex, h: &Subgroup) -> Result<PlainComplex, VerificationFailure> {
    const P: &str = "fixed cells form a subcomplex";
    let fixed: Vec<Vec<usize>> = (0..x.dims()).map(|n| x.fixed_cells(n, h)).collect();
    for n in 1..x.dims() {
        for &s in &fixed[n] {
            for t in 0..x.cell_count(n - 1) {
                ensure!(
                    x.boundary[n].get(t, s).is_zero() || fixed[n - 1].contains(&t),
                    P,
                    "fixed cell {} has non-fixed face {}",
                    x.names[n][s],
                    x.names[n - 1][t]
                );
            }
        }
    }
    let names = (0..x.dims())
        .map(|n| fixed[n].iter().map(|&s| x.names[n][s].clone()).collect())
        .collect();
    let boundary = (0..x.dims())
        .map(|n| {
            let rows = if n == 0 { Vec::new() } else { fixed[n - 1].clone() };
            x.boundary[n].select_rows(&rows).select_columns(&fixed[n])
        })
        .collect();
    let c = PlainComplex { names, boundary };
    ensure!(c.is_chain_complex(), P, "restricted boundary does not square to zero");
    Ok(c)
}

/// The contravariant functor `H ↦ ℤ[n-cells fixed by H]` on the orbit
/// category. For `f: H → K` via `g`, the matrix sends the `K`-fixed cell
/// `σ` to the `H`-fixed cell `σ·g`; rows index `H`-cells, columns `K`-cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainFunctor {
    pub degree: usize,
    /// Fixed cells (indices into the degree's cells) per object.
    pub bases: Vec<Vec<usize>>,
    /// Matrix per morphism of the orbit category.
    pub maps: Vec<IntMatrix>,
}

impl ChainFunctor {
    pub fn rank(&self, object: usize) -> usize {
        self.bases[object].len()
    }

    pub fn zero(cat: &OrbitCategory, degree: usize) -> Self {
        ChainFunctor {
            degree,
            bases: vec![Vec::new(); cat.object_count()],
            maps: vec![IntMatrix::zeros(0, 0); cat.morphisms().len()],
        }
    }

    /// Exhaustive contravariant functoriality check.
    pub fn check_functorial(&self, cat: &OrbitCategory) -> Result<(), VerificationFailure> {
        const P: &str = "chain functor is functorial";
        for (a, fa) in cat.morphisms().iter().enumerate() {
            for (b, fb) in cat.morphisms().iter().enumerate() {
                if fb.to != fa.from {
                    continue;
                }
                let ab = cat.compose(a, b).expect("composable");
                ensure!(
                    self.maps[ab] == &self.maps[b] * &self.maps[a],
                    P,
                    "F({}∘{}) ≠ F({})F({})",
                    a,
                    b,
                    b,
                    a
                );
            }
        }
        for o in 0..cat.object_count() {
            ensure!(
                self.maps[cat.identity(o)] == IntMatrix::identity(self.rank(o)),
                P,
                "identity at object {} is not sent to the identity",
                o
            );
        }
        Ok(())
    }
}

fn check_category(x: &GcwComplex, cat: &OrbitCategory) -> Result<(), GcwError> {
    if cat.group() == &x.group {
        Ok(())
    } else {
        Err(GcwError::GroupMismatch)
    }
}

pub fn chain_functor(x: &GcwComplex, cat: &OrbitCategory, n: usize) -> Result<ChainFunctor, GcwError> {
    check_category(x, cat)?;
    let bases: Vec<Vec<usize>> = cat.objects().iter().map(|h| x.fixed_cells(n, h)).collect();
    let maps = cat
        .morphisms()
        .iter()
        .map(|m| {
            let (hb, kb) = (&bases[m.from], &bases[m.to]);
            let mut mat = IntMatrix::zeros(hb.len(), kb.len());
            for (j, &s) in kb.iter().enumerate() {
                let image = x.act(n, s, m.element);
                let i = hb
                    .iter()
                    .position(|&t| t == image)
                    .expect("image is fixed by the source");
                mat.set(i, j, BigInt::one());
            }
            mat
        })
        .collect();
    Ok(ChainFunctor { degree: n, bases, maps })
}

/// `d: C_n → C_{n-1}` as one matrix per object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDifferential {
    pub degree: usize,
    pub components: Vec<IntMatrix>,
}

/// Restricts `∂_n` to fixed cells at every object, then checks naturality
/// against every morphism and `d∘d = 0`.
pub fn chain_differential(
    x: &GcwComplex,
    cat: &OrbitCategory,
    n: usize,
) -> Result<ChainDifferential, VerificationFailure> {
    const P: &str = "cellular differential is natural";
    check_category(x, cat).map_err(|e| VerificationFailure::new(P, e.to_string()))?;
    ensure!(n >= 1, P, "no differential out of degree 0");
    let f_n = chain_functor(x, cat, n).expect("same group");
    let f_m = chain_functor(x, cat, n - 1).expect("same group");
    let d = x.boundary(n);
    let components: Vec<IntMatrix> = (0..cat.object_count())
        .map(|o| d.select_rows(&f_m.bases[o]).select_columns(&f_n.bases[o]))
        .collect();
    for (id, m) in cat.morphisms().iter().enumerate() {
        // C_{n-1}(f) d_K = d_H C_n(f)
        ensure!(
            &f_m.maps[id] * &components[m.to] == &components[m.from] * &f_n.maps[id],
            P,
            "naturality fails on morphism {}",
            id
        );
    }
    if n >= 2 {
        let lower = chain_differential(x, cat, n - 1)?;
        for o in 0..cat.object_count() {
            ensure!(
                (&lower.components[o] * &components[o]).is_zero(),
                P,
                "d∘d ≠ 0 at object {}",
                o
            );
        }
    }
    Ok(ChainDifferential { degree: n, components })
}

/// One orbit of cells: a representative cell with stabilizer `orbit_type`
/// and its boundary chain on earlier cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellOrbit {
    pub name: String,
    pub dimension: usize,
    pub orbit_type: Subgroup,
    pub boundary: Vec<(String, BigInt)>,
}

/// Builds a complex cell orbit by cell orbit. An orbit with stabilizer `H`
/// contributes one cell per right coset `H∘x`, named `name` if there is one
/// coset and `name1, name2, …` otherwise; the cell for `H∘x` is the
/// representative moved by `x`. Every face of the representative must be
/// fixed by `H`.
pub fn assemble_from_cells(group: &FiniteGroup, layers: &[CellOrbit]) -> Result<GcwComplex, GcwError> {
    let dims = layers.iter().map(|l| l.dimension + 1).max().unwrap_or(0);
    let mut names: Vec<Vec<String>> = vec![Vec::new(); dims];
    // action[g][n][σ]
    let mut action: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); dims]; group.order()];
    let mut boundary: Vec<(String, Vec<(String, BigInt)>)> = Vec::new();
    let mut where_is: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    let mut sorted: Vec<&CellOrbit> = layers.iter().collect();
    sorted.sort_by_key(|l| l.dimension);
    for layer in sorted {
        let n = layer.dimension;
        let h = &layer.orbit_type;
        if !h.is_subgroup_of_group(group) {
            return Err(GcwError::BadLayer(
                layer.name.clone(),
                "orbit type is not a subgroup".into(),
            ));
        }
        let mut faces = Vec::new();
        for (face, k) in &layer.boundary {
            let Some(&(m, t)) = where_is.get(face) else {
                return Err(GcwError::BadLayer(layer.name.clone(), format!("unknown face {face}")));
            };
            if m + 1 != n {
                return Err(GcwError::BadLayer(
                    layer.name.clone(),
                    format!("face {face} has the wrong dimension"),
                ));
            }
            if !h.elements().iter().all(|&g| action[g][m][t] == t) {
                return Err(GcwError::Containment {
                    cell: layer.name.clone(),
                    orbit_type: subgroup_label(group, h),
                    face: face.clone(),
                });
            }
            faces.push((t, k.clone()));
        }
        let (reps, class_of) = right_coset_labels(group, h);
        let base = names[n].len();
        for (c, _) in reps.iter().enumerate() {
            let name = if reps.len() == 1 {
                layer.name.clone()
            } else {
                format!("{}{}", layer.name, c + 1)
            };
            where_is.insert(name.clone(), (n, base + c));
            names[n].push(name);
        }
        for g in group.elements() {
            for &x in &reps {
                action[g][n].push(base + class_of[group.mul(x, g)]);
            }
        }
        for (c, &x) in reps.iter().enumerate() {
            // ∂(σ·x) = (∂σ)·x
            let chain = faces
                .iter()
                .map(|(t, k)| (names[n - 1][action[x][n - 1][*t]].clone(), k.clone()))
                .collect::<Vec<_>>();
            if n > 0 {
                boundary.push((names[n][base + c].clone(), chain));
            } else if !faces.is_empty() {
                return Err(GcwError::BadLayer(layer.name.clone(), "0-cells have no faces".into()));
            }
        }
    }
    let raw = RawGcw {
        group: group.clone(),
        boundary,
        action: group
            .elements()
            .map(|g| {
                let imgs = (0..dims)
                    .map(|n| action[g][n].iter().map(|&t| names[n][t].clone()).collect())
                    .collect();
                (group.name(g).to_string(), imgs)
            })
            .collect(),
        cells: names,
        orbit_types: None,
    };
    validate_gcw(&raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn flip_circle_validates() {
        let x = fixtures::flip_circle();
        assert_eq!(x.cell_count(0), 2);
        assert_eq!(x.cell_count(1), 2);
        assert_eq!(validate_gcw(&x.to_raw()).unwrap(), x);
        let full = Subgroup::full(x.group());
        assert_eq!(x.fixed_cells(0, &full), [0, 1]);
        assert!(x.fixed_cells(1, &full).is_empty());
    }

    #[test]
    fn negated_edge_breaks_equivariance() {
        let mut raw = fixtures::flip_circle().to_raw();
        let e2 = raw.boundary.iter_mut().find(|(c, _)| c == "e2").unwrap();
        for (_, k) in e2.1.iter_mut() {
            *k = -k.clone();
        }
        raw.orbit_types = None;
        let Err(GcwError::Invalid(v)) = validate_gcw(&raw) else {
            panic!()
        };
        assert!(v.contains(&GcwViolation::NotEquivariant {
            element: "t".into(),
            cell: "e1".into()
        }));
    }

    #[test]
    fn mislabelled_orbit_type() {
        let mut raw = fixtures::flip_circle().to_raw();
        raw.orbit_types.as_mut().unwrap()[1][0] = vec!["v".into(), "t".into()];
        let Err(GcwError::Invalid(v)) = validate_gcw(&raw) else {
            panic!()
        };
        assert_eq!(v[0].kind(), "orbit-type");
    }

    #[test]
    fn point_complex() {
        let g = FiniteGroup::trivial();
        let p = assemble_from_cells(
            &g,
            &[CellOrbit {
                name: "*".into(),
                dimension: 0,
                orbit_type: Subgroup::full(&g),
                boundary: Vec::new(),
            }],
        )
        .unwrap();
        assert_eq!(p.cell_count(0), 1);
        let plain = fixed_subcomplex(&p, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(plain.homology(), [FgAbelianGroup::free(1)]);
        let cat = OrbitCategory::build(&g);
        let f1 = chain_functor(&p, &cat, 1).unwrap();
        assert!(f1.bases.iter().all(Vec::is_empty));
    }

    #[test]
    fn assembly_matches_flip_circle() {
        let x = fixtures::flip_circle();
        let g = x.group().clone();
        let full = Subgroup::full(&g);
        let layers = [
            CellOrbit {
                name: "■".into(),
                dimension: 0,
                orbit_type: full.clone(),
                boundary: Vec::new(),
            },
            CellOrbit {
                name: "▲".into(),
                dimension: 0,
                orbit_type: full.clone(),
                boundary: Vec::new(),
            },
            CellOrbit {
                name: "e".into(),
                dimension: 1,
                orbit_type: Subgroup::trivial(&g),
                boundary: vec![("▲".into(), BigInt::from(1)), ("■".into(), BigInt::from(-1))],
            },
        ];
        let y = assemble_from_cells(&g, &layers).unwrap();
        assert_eq!(y, x);
    }

    #[test]
    fn containment_rule() {
        let g = fixtures::flip_circle().group().clone();
        let layers = [
            CellOrbit {
                name: "p".into(),
                dimension: 0,
                orbit_type: Subgroup::trivial(&g),
                boundary: Vec::new(),
            },
            CellOrbit {
                name: "c".into(),
                dimension: 1,
                orbit_type: Subgroup::full(&g),
                boundary: vec![("p1".into(), BigInt::from(1))],
            },
        ];
        assert!(matches!(
            assemble_from_cells(&g, &layers),
            Err(GcwError::Containment { .. })
        ));
    }

    #[test]
    fn fixed_subcomplexes_of_flip_circle() {
        let x = fixtures::flip_circle();
        let g = x.group();
        let top = fixed_subcomplex(&x, &Subgroup::full(g)).unwrap();
        assert_eq!((top.cell_count(0), top.cell_count(1)), (2, 0));
        assert_eq!(top.homology(), [FgAbelianGroup::free(2), FgAbelianGroup::zero()]);
        let all = fixed_subcomplex(&x, &Subgroup::trivial(g)).unwrap();
        assert_eq!((all.cell_count(0), all.cell_count(1)), (2, 2));
        // oracle: raw ∂ of the circle
        let d = x.boundary(1);
        assert_eq!(
            homology_at(&IntMatrix::zeros(2, 0), &d).unwrap(),
            FgAbelianGroup::free(1)
        );
        assert_eq!(all.homology(), [FgAbelianGroup::free(1), FgAbelianGroup::free(1)]);
    }

    #[test]
    fn chain_functors_of_flip_circle() {
        let x = fixtures::flip_circle();
        let cat = OrbitCategory::build(x.group());
        let (e, full) = (0, 1);
        let c0 = chain_functor(&x, &cat, 0).unwrap();
        c0.check_functorial(&cat).unwrap();
        assert_eq!((c0.rank(e), c0.rank(full)), (2, 2));
        let up = cat.hom(e, full)[0];
        assert_eq!(c0.maps[up], IntMatrix::identity(2));
        for &m in cat.hom(e, e) {
            assert_eq!(c0.maps[m], IntMatrix::identity(2));
        }
        let c1 = chain_functor(&x, &cat, 1).unwrap();
        c1.check_functorial(&cat).unwrap();
        assert_eq!((c1.rank(e), c1.rank(full)), (2, 0));
        let t = x.group().element("t").unwrap();
        let swap = cat.morphism_via(e, e, t).unwrap();
        assert_eq!(c1.maps[swap], IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]));
        let d = chain_differential(&x, &cat, 1).unwrap();
        assert_eq!(d.components[e], IntMatrix::from_rows(&[vec![-1, -1], vec![1, 1]]));
        assert_eq!(d.components[full].shape(), (2, 0));
    }
}
