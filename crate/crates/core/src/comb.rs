//! Combs: a handle mapping isomorphically to P^1 with teeth glued at distinct
//! points. The Givental contraction sends a comb with handle forms `f_j` and
//! teeth of degree `d_i` at `z_i` to the forms `f_j * prod l_{z_i}^{d_i}`.
//!
//! Also here: dual trees with degree labels, stabilization after forgetting the
//! parametrization, the unique handle of an odd-degree tree and the
//! `n`-stability conditions for degree-1 morphisms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::chambers::Linearization;
use crate::error::{Error, Result};
use crate::geometry::{gcd_forms, BinaryForm, MobiusTransform, ProjPoint};
use crate::marks::MarkSet;
use crate::stability::{stability_status, Configuration, StabilityStatus};

/// A tree of components, each with a degree and a set of marks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeTree {
    degrees: Vec<usize>,
    edges: Vec<(usize, usize)>,
    marks: Vec<MarkSet>,
}

impl DegreeTree {
    /// `marks` may be empty, meaning no node carries marks.
    pub fn new(
        degrees: Vec<usize>,
        edges: Vec<(usize, usize)>,
        marks: Vec<MarkSet>,
    ) -> Result<Self> {
        let size = degrees.len();
        if size == 0 {
            return Err(Error::InvalidTree("no nodes".into()));
        }
        let marks = if marks.is_empty() {
            vec![MarkSet::empty(); size]
        } else {
            marks
        };
        if marks.len() != size {
            return Err(Error::InvalidTree(format!(
                "{} mark sets for {size} nodes",
                marks.len()
            )));
        }
        if edges.len() != size - 1 {
            return Err(Error::InvalidTree(format!(
                "{} edges for {size} nodes",
                edges.len()
            )));
        }
        if let Some(&(a, b)) = edges
            .iter()
            .find(|(a, b)| *a >= size || *b >= size || a == b)
        {
            return Err(Error::InvalidTree(format!("bad edge ({a}, {b})")));
        }
        let mut seen = MarkSet::empty();
        for m in &marks {
            if m.bits() & seen.bits() != 0 {
                return Err(Error::InvalidTree("a mark sits on two nodes".into()));
            }
            seen = MarkSet::from_bits(seen.bits() | m.bits());
        }
        let tree = DegreeTree {
            degrees,
            edges,
            marks,
        };
        if tree.component(0, None).len() != size {
            return Err(Error::InvalidTree("not connected".into()));
        }
        Ok(tree)
    }

    pub fn single(degree: usize, marks: MarkSet) -> Self {
        DegreeTree {
            degrees: vec![degree],
            edges: vec![],
            marks: vec![marks],
        }
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn marks(&self) -> &[MarkSet] {
        &self.marks
    }

    pub fn total_degree(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn all_marks(&self) -> MarkSet {
        MarkSet::from_bits(self.marks.iter().fold(0, |acc, m| acc | m.bits()))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Marks plus nodes on `v`.
    pub fn special_points(&self, v: usize) -> usize {
        self.marks[v].len() + self.neighbors(v).len()
    }

    /// Nodes reachable from `start` without passing through `avoid`.
    pub fn component(&self, start: usize, avoid: Option<usize>) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        if let Some(a) = avoid {
            seen[a] = true;
        }
        let mut stack = vec![start];
        seen[start] = true;
        let mut out = Vec::new();
        while let Some(v) = stack.pop() {
            out.push(v);
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The branches at `v`: for each neighbor, the nodes on its side.
    pub fn branches(&self, v: usize) -> Vec<Vec<usize>> {
        self.neighbors(v)
            .into_iter()
            .map(|w| self.component(w, Some(v)))
            .collect()
    }

    fn degree_of(&self, nodes: &[usize]) -> usize {
        nodes.iter().map(|&v| self.degrees[v]).sum()
    }

    /// Joins `other` to this tree by an edge between `at` and `other`'s node 0.
    fn graft(&mut self, at: usize, other: &DegreeTree) {
        let offset = self.len();
        self.degrees.extend(&other.degrees);
        self.marks.extend(&other.marks);
        self.edges.push((at, offset));
        self.edges
            .extend(other.edges.iter().map(|(a, b)| (a + offset, b + offset)));
    }

    /// Every degree-0 node has at least three special points.
    pub fn is_stable(&self) -> bool {
        (0..self.len()).all(|v| self.degrees[v] > 0 || self.special_points(v) >= 3)
    }

    /// Contracts degree-0 components with fewer than three special points,
    /// lowest index first, until none is left.
    pub fn stabilize(&self) -> Result<DegreeTree> {
        let mut t = self.clone();
        while let Some(v) = (0..t.len()).find(|&v| t.degrees[v] == 0 && t.special_points(v) < 3) {
            let nbrs = t.neighbors(v);
            let mut edges: Vec<(usize, usize)> = t
                .edges
                .iter()
                .copied()
                .filter(|&(a, b)| a != v && b != v)
                .collect();
            match (nbrs.as_slice(), t.marks[v].len()) {
                ([], _) => return Err(Error::Unstabilizable),
                ([w], _) => {
                    let moved = t.marks[v];
                    t.marks[*w] = MarkSet::from_bits(t.marks[*w].bits() | moved.bits());
                }
                ([a, b], 0) => edges.push((*a, *b)),
                _ => unreachable!("fewer than three special points"),
            }
            let reindex = |u: usize| if u > v { u - 1 } else { u };
            t.edges = edges
                .into_iter()
                .map(|(a, b)| (reindex(a), reindex(b)))
                .collect();
            t.degrees.remove(v);
            t.marks.remove(v);
        }
        Ok(t)
    }
}

impl fmt::Display for DegreeTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = (0..self.len())
            .map(|v| {
                if self.marks[v].is_empty() {
                    format!("{v}:{}", self.degrees[v])
                } else {
                    format!("{v}:{}{}", self.degrees[v], self.marks[v])
                }
            })
            .collect();
        let edges: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "nodes [{}] edges [{}]", nodes.join(" "), edges.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DegreeTreeDoc {
    degrees: Vec<usize>,
    #[serde(default)]
    edges: Vec<(usize, usize)>,
    #[serde(default)]
    marks: Vec<MarkSet>,
}

impl Serialize for DegreeTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DegreeTreeDoc {
            degrees: self.degrees.clone(),
            edges: self.edges.clone(),
            marks: self.marks.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DegreeTree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = DegreeTreeDoc::deserialize(d)?;
        DegreeTree::new(doc.degrees, doc.edges, doc.marks).map_err(de::Error::custom)
    }
}

/// The node every connected subtree of degree at least `d/2` contains: the one
/// whose branches all have degree below `d/2`.
pub fn unique_handle(t: &DegreeTree) -> Result<usize> {
    let d = t.total_degree();
    if d.is_multiple_of(2) {
        return Err(Error::EvenTotalDegree(d as u64));
    }
    (0..t.len())
        .find(|&v| t.branches(v).iter().all(|b| 2 * t.degree_of(b) < d))
        .ok_or_else(|| Error::InvalidTree("no node has all branches below d/2".into()))
}

/// A tooth glued to the handle at `attach`. `subtree`, when given, is the
/// tooth's own dual tree with node 0 meeting the handle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tooth {
    pub attach: ProjPoint,
    pub degree: usize,
    #[serde(default)]
    pub marks: MarkSet,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subtree: Option<DegreeTree>,
}

impl Tooth {
    pub fn new(attach: ProjPoint, degree: usize, marks: MarkSet) -> Self {
        Tooth {
            attach,
            degree,
            marks,
            subtree: None,
        }
    }

    fn tree(&self) -> DegreeTree {
        self.subtree
            .clone()
            .unwrap_or_else(|| DegreeTree::single(self.degree, self.marks))
    }
}

/// A point of the graph space: handle forms without common zeros, teeth, and
/// marks either on the handle or on a tooth.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Comb {
    n: usize,
    handle_forms: Vec<BinaryForm>,
    teeth: Vec<Tooth>,
    handle_marks: BTreeMap<usize, ProjPoint>,
}

impl Comb {
    pub fn new(
        n: usize,
        handle_forms: Vec<BinaryForm>,
        teeth: Vec<Tooth>,
        handle_marks: BTreeMap<usize, ProjPoint>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidComb(msg));
        let first = handle_forms.first().ok_or(Error::NoForms)?;
        if let Some(f) = handle_forms.iter().find(|f| f.degree() != first.degree()) {
            return Err(Error::MixedDegrees(first.degree(), f.degree()));
        }
        if gcd_forms(&handle_forms)?.degree() > 0 {
            return bad("handle forms share a zero".into());
        }
        let mut places = BTreeSet::new();
        for p in teeth.iter().map(|t| &t.attach).chain(handle_marks.values()) {
            if !places.insert(p.clone()) {
                return bad(format!("two special points of the handle at {p}"));
            }
        }
        let mut seen = MarkSet::empty();
        for m in teeth.iter().map(|t| t.marks).chain(
            handle_marks
                .keys()
                .map(|&i| MarkSet::from_bits(1u64 << (i - 1).min(63))),
        ) {
            if m.bits() & seen.bits() != 0 {
                return bad(format!("mark set {m} repeats a mark"));
            }
            seen = MarkSet::from_bits(seen.bits() | m.bits());
        }
        if handle_marks.keys().any(|&i| i == 0 || i > n) || seen != MarkSet::full(n) {
            return bad(format!("marks {seen} must be exactly 1..={n}"));
        }
        for t in &teeth {
            let tree = t.tree();
            if tree.total_degree() != t.degree || tree.all_marks() != t.marks {
                return bad(format!("subtree at {} disagrees with its tooth", t.attach));
            }
            // the node on the handle is special for the tooth's root
            let unstable = (0..tree.len())
                .any(|v| tree.degrees[v] == 0 && tree.special_points(v) + usize::from(v == 0) < 3);
            if unstable {
                return bad(format!(
                    "tooth at {} has a contracted component with < 3 special points",
                    t.attach
                ));
            }
        }
        Ok(Comb {
            n,
            handle_forms,
            teeth,
            handle_marks,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.handle_degree() + self.teeth.iter().map(|t| t.degree).sum::<usize>()
    }

    pub fn r(&self) -> usize {
        self.handle_forms.len() - 1
    }

    pub fn handle_degree(&self) -> usize {
        self.handle_forms[0].degree()
    }

    pub fn handle_forms(&self) -> &[BinaryForm] {
        &self.handle_forms
    }

    pub fn teeth(&self) -> &[Tooth] {
        &self.teeth
    }

    pub fn handle_marks(&self) -> &BTreeMap<usize, ProjPoint> {
        &self.handle_marks
    }

    /// The dual tree: node 0 is the handle, teeth follow in order.
    pub fn dual_tree(&self) -> DegreeTree {
        let handle_marks = MarkSet::from_marks(self.handle_marks.keys().copied(), self.n)
            .expect("validated marks");
        let mut t = DegreeTree::single(self.handle_degree(), handle_marks);
        for tooth in &self.teeth {
            t.graft(0, &tooth.tree());
        }
        t
    }
}

impl fmt::Display for Comb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let forms: Vec<String> = self.handle_forms.iter().map(ToString::to_string).collect();
        write!(f, "handle ({})", forms.join(", "))?;
        for (i, p) in &self.handle_marks {
            write!(f, ", mark {i} at {p}")?;
        }
        for t in &self.teeth {
            write!(f, "; tooth degree {} at {}", t.degree, t.attach)?;
            if !t.marks.is_empty() {
                write!(f, " marks {}", t.marks)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CombDoc {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
    handle_forms: Vec<BinaryForm>,
    #[serde(default)]
    teeth: Vec<Tooth>,
    #[serde(default)]
    handle_marks: BTreeMap<usize, ProjPoint>,
}

impl Serialize for Comb {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CombDoc {
            n: self.n,
            d: Some(self.d()),
            handle_forms: self.handle_forms.clone(),
            teeth: self.teeth.clone(),
            handle_marks: self.handle_marks.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Comb {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = CombDoc::deserialize(d)?;
        let comb = Comb::new(doc.n, doc.handle_forms, doc.teeth, doc.handle_marks)
            .map_err(de::Error::custom)?;
        match doc.d {
            Some(d) if d != comb.d() => Err(de::Error::custom(format!(
                "d = {d} but handle and teeth have total degree {}",
                comb.d()
            ))),
            _ => Ok(comb),
        }
    }
}

/// The Givental contraction: forms `f_j * h` with `h = prod l_{z_i}^{d_i}`, marks
/// on a tooth sent to its attach point.
pub fn contract(c: &Comb) -> Configuration {
    let h = c
        .teeth
        .iter()
        .fold(BinaryForm::constant(num::One::one()), |h, t| {
            h.mul(&BinaryForm::linear_at(&t.attach).pow(t.degree))
        });
    let mut points = vec![ProjPoint::infinity(); c.n];
    for (&i, p) in &c.handle_marks {
        points[i - 1] = p.clone();
    }
    for t in &c.teeth {
        for i in t.marks.iter() {
            points[i - 1] = t.attach.clone();
        }
    }
    let forms = c.handle_forms.iter().map(|f| f.mul(&h)).collect();
    Configuration::new(points, forms).expect("handle forms are not all zero")
}

/// Moves the handle by `g`: attach points and handle marks go to their images,
/// handle forms become `f o g^-1`, teeth are unchanged.
pub fn act_on_comb(g: &MobiusTransform, c: &Comb) -> Comb {
    let inv = g.inverse();
    Comb {
        n: c.n,
        handle_forms: c.handle_forms.iter().map(|f| f.compose(&inv)).collect(),
        teeth: c
            .teeth
            .iter()
            .map(|t| Tooth {
                attach: g.apply(&t.attach),
                ..t.clone()
            })
            .collect(),
        handle_marks: c
            .handle_marks
            .iter()
            .map(|(&i, p)| (i, g.apply(p)))
            .collect(),
    }
}

/// Forgets the map to P^1 and contracts what became unstable.
pub fn forgetful_stabilize(c: &Comb) -> Result<DegreeTree> {
    c.dual_tree().stabilize()
}

/// Conditions for a degree-1 morphism with `big_n` marks to be `n`-stable.
/// `coincident` lists groups of marks sitting at one point; each group lies on
/// a single component and other marks are at distinct points.
pub fn n_stable_check(
    t: &DegreeTree,
    parametrized: usize,
    coincident: &[MarkSet],
    big_n: usize,
    n: usize,
) -> Result<bool> {
    if parametrized >= t.len() {
        return Err(Error::InvalidTree(format!("no node {parametrized}")));
    }
    if n == 0 || n >= big_n || t.all_marks() != MarkSet::full(big_n) {
        return Err(Error::InvalidTree(format!(
            "need 1 <= n < N and marks 1..={big_n}"
        )));
    }
    let mut grouped = MarkSet::empty();
    let mut merged = vec![0usize; t.len()];
    for g in coincident {
        let Some(v) = (0..t.len()).find(|&v| g.bits() & !t.marks[v].bits() == 0) else {
            return Err(Error::InvalidTree(format!("group {g} spans components")));
        };
        if g.is_empty() || g.bits() & grouped.bits() != 0 {
            return Err(Error::InvalidTree(format!(
                "group {g} is empty or overlaps another"
            )));
        }
        grouped = MarkSet::from_bits(grouped.bits() | g.bits());
        merged[v] += g.len() - 1;
    }
    let slack = big_n - n;
    let at_most_slack = coincident.iter().all(|g| g.len() <= slack);
    let ends_heavy = (0..t.len())
        .filter(|&v| v != parametrized && t.neighbors(v).len() <= 1)
        .all(|v| t.marks[v].len() > slack);
    let distinct_special = (0..t.len())
        .filter(|&v| v != parametrized)
        .all(|v| t.special_points(v) - merged[v] >= 3);
    Ok(at_most_slack && ends_heavy && distinct_special)
}

/// `(r + 1)(k - 1) + 1`, the stability index for the `k`-th intermediate space.
pub fn intermediate_threshold(k: usize, r: usize) -> usize {
    assert!(k >= 1, "intermediate spaces are indexed from k = 1");
    (r + 1) * (k - 1) + 1
}

pub fn comb_git_status(c: &Comb, k: &Linearization) -> Result<StabilityStatus> {
    stability_status(&contract(c), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivariance::act_on_configuration;
    use crate::geometry::projectively_equal;
    use crate::rational::int;
    use crate::stability::Stability;

    fn xy() -> Vec<BinaryForm> {
        vec![
            BinaryForm::from_ints(&[1, 0]),
            BinaryForm::from_ints(&[0, 1]),
        ]
    }

    fn chain(degrees: &[usize]) -> DegreeTree {
        let edges = (1..degrees.len()).map(|i| (i - 1, i)).collect();
        DegreeTree::new(degrees.to_vec(), edges, vec![]).unwrap()
    }

    fn marks(ms: &[usize], n: usize) -> MarkSet {
        MarkSet::from_marks(ms.iter().copied(), n).unwrap()
    }

    #[test]
    fn contract_examples() {
        let plain = Comb::new(0, xy(), vec![], BTreeMap::new()).unwrap();
        assert_eq!(contract(&plain).forms(), xy().as_slice());

        let c = Comb::new(
            0,
            xy(),
            vec![Tooth::new(ProjPoint::infinity(), 1, MarkSet::empty())],
            BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(
            contract(&c).forms(),
            &[
                BinaryForm::from_ints(&[0, 1, 0]),
                BinaryForm::from_ints(&[0, 0, 1])
            ]
        );

        let c = Comb::new(
            1,
            xy(),
            vec![Tooth::new(ProjPoint::affine(int(1)), 1, marks(&[1], 1))],
            BTreeMap::new(),
        )
        .unwrap();
        let image = contract(&c);
        assert_eq!(
            image.forms(),
            &[
                BinaryForm::from_ints(&[1, -1, 0]),
                BinaryForm::from_ints(&[0, 1, -1])
            ]
        );
        assert_eq!(image.points(), &[ProjPoint::affine(int(1))]);
    }

    #[test]
    fn comb_validation() {
        let shared = vec![
            BinaryForm::from_ints(&[1, 0]),
            BinaryForm::from_ints(&[2, 0]),
        ];
        assert!(Comb::new(0, shared, vec![], BTreeMap::new()).is_err());
        let twice = vec![
            Tooth::new(ProjPoint::zero(), 1, MarkSet::empty()),
            Tooth::new(ProjPoint::zero(), 1, MarkSet::empty()),
        ];
        assert!(Comb::new(0, xy(), twice, BTreeMap::new()).is_err());
        let lonely = vec![Tooth::new(ProjPoint::zero(), 0, marks(&[1], 1))];
        assert!(Comb::new(1, xy(), lonely, BTreeMap::new()).is_err());
        let pair = vec![Tooth::new(ProjPoint::zero(), 0, marks(&[1, 2], 2))];
        assert!(Comb::new(2, xy(), pair, BTreeMap::new()).is_ok());
        let missing = BTreeMap::from([(2, ProjPoint::zero())]);
        assert!(Comb::new(2, xy(), vec![], missing).is_err());
    }

    #[test]
    fn action_examples() {
        let c = Comb::new(
            0,
            xy(),
            vec![Tooth::new(ProjPoint::infinity(), 1, MarkSet::empty())],
            BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(act_on_comb(&MobiusTransform::identity(), &c), c);
        let swapped = act_on_comb(&MobiusTransform::swap(), &c);
        assert_eq!(swapped.teeth()[0].attach, ProjPoint::zero());
        assert_eq!(
            swapped.handle_forms(),
            &[
                BinaryForm::from_ints(&[0, 1]),
                BinaryForm::from_ints(&[1, 0])
            ]
        );
        assert_eq!(swapped.teeth()[0].degree, 1);
    }

    #[test]
    fn contraction_is_equivariant() {
        let c = Comb::new(
            2,
            vec![
                BinaryForm::from_ints(&[1, 1]),
                BinaryForm::from_ints(&[0, 3]),
            ],
            vec![Tooth::new(ProjPoint::affine(int(2)), 2, marks(&[2], 2))],
            BTreeMap::from([(1, ProjPoint::zero())]),
        )
        .unwrap();
        let g = MobiusTransform::from_ints(2, 1, -1, 3).unwrap();
        let lhs = contract(&act_on_comb(&g, &c));
        let rhs = act_on_configuration(&g, &contract(&c));
        assert_eq!(lhs.points(), rhs.points());
        assert!(projectively_equal(lhs.forms(), rhs.forms()));
    }

    #[test]
    fn stabilization_examples() {
        let degree_three = |teeth| {
            Comb::new(
                0,
                vec![BinaryForm::from_ints(&[1]), BinaryForm::from_ints(&[2])],
                teeth,
                BTreeMap::new(),
            )
        };
        let c = Comb::new(
            0,
            vec![
                BinaryForm::from_ints(&[1, 0, 0]),
                BinaryForm::from_ints(&[0, 0, 1]),
            ],
            vec![],
            BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(
            forgetful_stabilize(&c).unwrap(),
            DegreeTree::single(2, MarkSet::empty())
        );

        let c = degree_three(vec![Tooth::new(ProjPoint::zero(), 3, MarkSet::empty())]).unwrap();
        assert_eq!(
            forgetful_stabilize(&c).unwrap(),
            DegreeTree::single(3, MarkSet::empty())
        );

        let c = Comb::new(
            1,
            vec![BinaryForm::from_ints(&[1])],
            vec![
                Tooth::new(ProjPoint::zero(), 1, MarkSet::empty()),
                Tooth::new(ProjPoint::infinity(), 2, MarkSet::empty()),
            ],
            BTreeMap::from([(1, ProjPoint::affine(int(1)))]),
        )
        .unwrap();
        let t = forgetful_stabilize(&c).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.stabilize().unwrap(), t);

        // handle with two teeth and no marks: the teeth get joined
        let c = degree_three(vec![
            Tooth::new(ProjPoint::zero(), 1, MarkSet::empty()),
            Tooth::new(ProjPoint::infinity(), 2, MarkSet::empty()),
        ])
        .unwrap();
        let t = forgetful_stabilize(&c).unwrap();
        assert_eq!(t.degrees(), &[1, 2]);
        assert_eq!(t.edges(), &[(0, 1)]);
    }

    #[test]
    fn stabilization_failure() {
        let t = DegreeTree::single(0, marks(&[1, 2], 2));
        assert_eq!(t.stabilize(), Err(Error::Unstabilizable));
    }

    #[test]
    fn handle_examples() {
        assert_eq!(
            unique_handle(&DegreeTree::single(3, MarkSet::empty())),
            Ok(0)
        );
        assert_eq!(unique_handle(&chain(&[1, 0, 2])), Ok(2));
        let star = DegreeTree::new(vec![3, 0, 0, 0], vec![(0, 1), (0, 2), (0, 3)], vec![]).unwrap();
        assert_eq!(unique_handle(&star), Ok(0));
        assert_eq!(
            unique_handle(&chain(&[1, 1])),
            Err(Error::EvenTotalDegree(2))
        );
        assert_eq!(unique_handle(&chain(&[1, 1, 1])), Ok(1));
    }

    #[test]
    fn tree_validation() {
        assert!(DegreeTree::new(vec![1, 1], vec![], vec![]).is_err());
        assert!(DegreeTree::new(vec![1, 1, 1], vec![(0, 1), (0, 1)], vec![]).is_err());
        assert!(
            DegreeTree::new(vec![1], vec![], vec![MarkSet::empty(), MarkSet::empty()]).is_err()
        );
    }

    #[test]
    fn n_stability_examples() {
        let big_n = 5;
        let one = DegreeTree::single(1, MarkSet::full(big_n));
        for n in 1..big_n {
            assert_eq!(n_stable_check(&one, 0, &[], big_n, n), Ok(true));
        }
        // N - n + 1 = 3 marks together when n = 3
        let group = marks(&[1, 2, 3], big_n);
        assert_eq!(n_stable_check(&one, 0, &[group], big_n, 3), Ok(false));
        assert_eq!(n_stable_check(&one, 0, &[group], big_n, 2), Ok(true));
        // an ending component with exactly N - n = 2 marks
        let t = DegreeTree::new(
            vec![1, 0],
            vec![(0, 1)],
            vec![marks(&[3, 4, 5], big_n), marks(&[1, 2], big_n)],
        )
        .unwrap();
        assert_eq!(n_stable_check(&t, 0, &[], big_n, 3), Ok(false));
        assert_eq!(n_stable_check(&t, 0, &[], big_n, 4), Ok(true));
        // coincident marks do not count as distinct special points
        let t3 = DegreeTree::new(
            vec![1, 0],
            vec![(0, 1)],
            vec![marks(&[4, 5], big_n), marks(&[1, 2, 3], big_n)],
        )
        .unwrap();
        assert_eq!(n_stable_check(&t3, 0, &[], big_n, 3), Ok(true));
        assert_eq!(
            n_stable_check(&t3, 0, &[marks(&[1, 2], big_n)], big_n, 3),
            Ok(true)
        );
        // a bare bridge between the handle and an end has only two special points
        let bridge = DegreeTree::new(
            vec![1, 0, 0],
            vec![(0, 1), (1, 2)],
            vec![
                marks(&[4, 5], big_n),
                MarkSet::empty(),
                marks(&[1, 2, 3], big_n),
            ],
        )
        .unwrap();
        assert_eq!(n_stable_check(&bridge, 0, &[], big_n, 3), Ok(false));
        assert!(n_stable_check(
            &t3,
            0,
            &[marks(&[1], big_n), marks(&[1, 2], big_n)],
            big_n,
            3
        )
        .is_err());
    }

    #[test]
    fn thresholds() {
        assert_eq!(intermediate_threshold(1, 4), 1);
        assert_eq!(intermediate_threshold(2, 2), 4);
        for d in 2..8 {
            assert_eq!(intermediate_threshold(d - 1, 1), 2 * d - 3);
        }
    }

    #[test]
    fn git_status_of_teeth() {
        let k3 = Linearization::ones(0, 3);
        let deg = |handle: usize, tooth: usize| {
            let forms = vec![
                BinaryForm::monomial(handle, 0),
                BinaryForm::monomial(handle, handle),
            ];
            Comb::new(
                0,
                forms,
                vec![Tooth::new(ProjPoint::zero(), tooth, MarkSet::empty())],
                BTreeMap::new(),
            )
            .unwrap()
        };
        assert_eq!(
            comb_git_status(&deg(2, 1), &k3).unwrap().status,
            Stability::Stable
        );
        assert_eq!(
            comb_git_status(&deg(1, 2), &k3).unwrap().status,
            Stability::Unstable
        );
        let k4 = Linearization::ones(0, 4);
        assert_eq!(
            comb_git_status(&deg(2, 2), &k4).unwrap().status,
            Stability::StrictlySemistable
        );
    }
}
