//! Small worked examples across the public API, computed by hand.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;

use carrier_nerve::carrier::{
    b_carrier, canonical_nerve_map, carried_map_via_cones, extend_carried_map, i_carrier, is_carried,
    is_weakly_carried, s_carrier, Carrier, ConeCertificates, SimplicialMap, Validity,
};
use carrier_nerve::complex::{complexes_isomorphic, Simplex, SimplicialComplex, Vertex, DEFAULT_ISO_CAP};
use carrier_nerve::cover::{barycentric_star_cover, covers_isomorphic, open_star_cover, PieceName, RegularityMode};
use carrier_nerve::gallery::{self, suite, suite_cover};
use carrier_nerve::homology::{
    chain_complex, connectivity_certificate, homology, induced_chain_map, is_quasi_iso, mapping_cone,
    smith_normal_form, ChainMap, ConnectivityVerdict, IntegerMatrix, QuasiIso,
};
use carrier_nerve::verdict::Verdict;
use carrier_nerve::verify::{contiguity_chain, contiguous, g_close, verify_n_nerve_theorem};

fn cx(facets: &[&[&str]]) -> SimplicialComplex {
    let f: Vec<Vec<&str>> = facets.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::from_labels(&f).unwrap()
}

fn v(s: &str) -> Vertex {
    Vertex::parse(s).unwrap()
}

fn pn(s: &str) -> PieceName {
    PieceName::new(s).unwrap()
}

fn face(labels: &[&str]) -> Simplex {
    Simplex::new(labels.iter().map(|l| v(l)).collect()).unwrap()
}

fn triangle_boundary() -> SimplicialComplex {
    cx(&[&["a", "b"], &["b", "c"], &["a", "c"]])
}

#[test]
fn face_counts_and_subdivisions() {
    assert_eq!(cx(&[&["a", "b", "c", "d"]]).faces().len(), 15);
    assert_eq!(gallery::bd_delta(3).faces().len(), 14);
    assert_eq!(gallery::bd_delta(3).skeleton(0).f_vector(), vec![4]);
    assert_eq!(cx(&[&["a", "b", "c"]]).skeleton(1), triangle_boundary());
    assert_eq!(cx(&[&["a", "b"]]).barycentric_subdivision(), cx(&[&["b(a)", "b(a,b)"], &["b(b)", "b(a,b)"]]));
    assert_eq!(cx(&[&["a", "b", "c"]]).barycentric_subdivision().f_vector(), vec![7, 12, 6]);
    for id in suite() {
        let k = gallery::make(&id).unwrap().complex().clone();
        assert_eq!(k.euler_characteristic(), k.barycentric_subdivision().euler_characteristic(), "{id}");
    }
}

#[test]
fn stars() {
    let path = cx(&[&["a", "v"], &["v", "b"]]);
    let st = path.open_star(&v("v")).unwrap();
    assert_eq!(st.members, [face(&["v"]), face(&["a", "v"]), face(&["b", "v"])].into());

    let bst = cx(&[&["a", "v"]]).barycentric_star(&v("v")).unwrap();
    assert_eq!(bst, cx(&[&["b(v)", "b(a,v)"]]));
    assert_eq!(bst.is_cone(), Some(v("b(v)")));

    for id in suite() {
        let k = gallery::make(&id).unwrap().complex().clone();
        let sd = k.barycentric_subdivision();
        let mut union = std::collections::BTreeSet::new();
        for x in k.vertices() {
            let b = k.barycentric_star(x).unwrap();
            assert_eq!(b.is_cone(), Some(Vertex::barycenter(Simplex::point(x.clone()))), "{id}");
            union.extend(b.faces().iter().cloned());
        }
        assert_eq!(&union, sd.faces(), "{id}");
    }
}

#[test]
fn cones_collapses_and_isomorphisms() {
    assert_eq!(cx(&[&["a", "b", "c"]]).is_cone(), Some(v("a")));
    assert_eq!(triangle_boundary().is_cone(), None);
    assert!(cx(&[&["a", "b", "c", "d"]]).collapse_to_point(1000).is_collapsible());
    assert!(!triangle_boundary().collapse_to_point(1000).is_collapsible());

    let path3 = cx(&[&["a", "b"], &["b", "c"], &["c", "d"]]);
    assert!(complexes_isomorphic(&triangle_boundary(), &path3, DEFAULT_ISO_CAP).unwrap().is_none());
    let t = gallery::torus7();
    let nerve = open_star_cover(&t).nerve(None).complex;
    assert!(complexes_isomorphic(&nerve, &t, DEFAULT_ISO_CAP).unwrap().is_some());
}

#[test]
fn boundary_matrices() {
    let edge = chain_complex(&cx(&[&["a", "b"]]));
    assert_eq!(edge.boundary(1), IntegerMatrix::from_rows(&[vec![-1], vec![1]]));
    let sphere = chain_complex(&gallery::bd_delta(3));
    let (d1, d2) = (sphere.boundary(1), sphere.boundary(2));
    assert_eq!((d2.rows(), d2.cols()), (6, 4));
    assert_eq!((d1.rows(), d1.cols()), (4, 6));
    assert!(d1.mul(&d2).is_zero());
}

#[test]
fn smith_forms_by_hand() {
    let snf = smith_normal_form(&IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
    assert_eq!(snf.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
    let zero = smith_normal_form(&IntegerMatrix::zeros(2, 3));
    assert!(zero.d.is_zero());
    assert_eq!(zero.u, IntegerMatrix::identity(2));
    assert_eq!(zero.v, IntegerMatrix::identity(3));
    let d1 = chain_complex(&triangle_boundary()).boundary(1);
    assert_eq!(smith_normal_form(&d1).invariant_factors(), vec![BigInt::from(1); 2]);
}

#[test]
fn homology_of_named_surfaces() {
    let sphere = homology(&gallery::bd_delta(3), false);
    assert_eq!(sphere.betti_numbers(), vec![1, 0, 1]);
    let torus = homology(&gallery::torus7(), false);
    assert_eq!(torus.betti_numbers(), vec![1, 2, 1]);
    assert!(torus.degrees.iter().all(|g| g.torsion.is_empty()));
    let rp2 = homology(&gallery::rp2_6(), false);
    assert_eq!(rp2.betti_numbers(), vec![1, 0, 0]);
    assert_eq!(rp2.torsion(1), &[BigInt::from(2)]);
}

#[test]
fn chain_maps_and_cones() {
    let edge = cx(&[&["a", "b"]]);
    let point = cx(&[&["c"]]);
    let collapse = SimplicialMap::constant(&edge, &point, &v("c")).unwrap();
    assert!(induced_chain_map(&collapse).unwrap().component(1).is_zero());

    let h = canonical_nerve_map(&gallery::three_arcs()).unwrap();
    let f = induced_chain_map(&h).unwrap();
    // three sd-edges cross arc boundaries, one onto each nerve edge
    assert_eq!(smith_normal_form(&f.component(1)).rank(), 3);
    // on H_1 the map has rank 1: the fundamental cycle goes to a nonzero
    // cycle, and C_3 has no 2-chains to bound it
    let d1 = f.source().boundary(1);
    let snf = smith_normal_form(&d1);
    assert_eq!(snf.rank(), d1.cols() - 1);
    let z = IntegerMatrix::from_dense(
        d1.cols(),
        1,
        (0..d1.cols()).map(|i| vec![snf.v.get(i, d1.cols() - 1)]).collect(),
    );
    let image = f.component(1).mul(&z);
    assert!(!image.is_zero());
    assert!(f.target().boundary(1).mul(&image).is_zero());
    assert_eq!(is_quasi_iso(&f, None).unwrap(), QuasiIso::Yes);

    let p = chain_complex(&point);
    let zero = ChainMap::new(p.clone(), p.clone(), vec![IntegerMatrix::zeros(1, 1)]).unwrap();
    assert_eq!(mapping_cone(&zero).unwrap().homology(false).betti_numbers(), vec![1, 1]);
    assert!(mapping_cone(&ChainMap::identity(&p)).unwrap().homology(true).is_trivial());

    let sphere = gallery::bd_delta(3);
    let apex = cx(&[&["v0"]]);
    let inclusion = SimplicialMap::new(apex, sphere, [(v("v0"), v("v0"))].into()).unwrap();
    assert_eq!(is_quasi_iso(&induced_chain_map(&inclusion).unwrap(), None).unwrap(), QuasiIso::No);

    let two = canonical_nerve_map(&gallery::two_arcs()).unwrap();
    assert_eq!(is_quasi_iso(&induced_chain_map(&two).unwrap(), None).unwrap(), QuasiIso::No);
}

#[test]
fn connectivity_examples() {
    let points = cx(&[&["x"], &["y"]]);
    assert_eq!(connectivity_certificate(&points, -1).verdict, ConnectivityVerdict::Connected);
    assert_eq!(connectivity_certificate(&points, 0).verdict, ConnectivityVerdict::NotConnected);
    let sphere = gallery::bd_delta(3);
    assert_eq!(connectivity_certificate(&sphere, 1).verdict, ConnectivityVerdict::Connected);
    assert_eq!(connectivity_certificate(&sphere, 2).verdict, ConnectivityVerdict::NotConnected);
}

#[test]
fn cover_operations() {
    let two = gallery::two_arcs();
    let meet = two.intersection([&pn("arc1"), &pn("arc2")]).unwrap();
    assert_eq!(meet.faces(), &[face(&["v0"]), face(&["v6"])].into());

    let three = gallery::three_arcs();
    let all: Vec<PieceName> = three.names().cloned().collect();
    assert_eq!(three.union_of(&all).unwrap().faces(), three.base().faces());
    assert_eq!(three.cover_star(&pn("arc0")).unwrap().faces(), three.base().faces());

    let st = open_star_cover(&triangle_boundary());
    assert_eq!(st.cover_star(&pn("a")).unwrap().faces(), triangle_boundary().faces());
    assert!(open_star_cover(&cx(&[&["a", "b", "c"]])).intersection([&pn("a"), &pn("b"), &pn("c")]).unwrap().faces().len() == 1);
}

#[test]
fn nerves_and_regularity() {
    let c3 = cx(&[&["arc0", "arc1"], &["arc1", "arc2"], &["arc0", "arc2"]]);
    assert_eq!(gallery::three_arcs().nerve(None).complex, c3);
    assert_eq!(gallery::two_arcs().nerve(None).complex, cx(&[&["arc1", "arc2"]]));
    assert_eq!(gallery::three_arcs().check_regularity(RegularityMode::Regular).overall, Verdict::Holds);
    assert_eq!(gallery::two_arcs().check_regularity(RegularityMode::Regular).overall, Verdict::Fails);
    assert_eq!(gallery::face_cover_bd_delta3().check_regularity(RegularityMode::Regular).overall, Verdict::Holds);
    assert_eq!(gallery::face_cover_bd_delta3().nerve(None).complex.f_vector(), vec![4, 6, 4]);
}

#[test]
fn isomorphic_covers() {
    for id in suite() {
        let k = gallery::make(&id).unwrap().complex().clone();
        let st = Arc::new(open_star_cover(&k));
        let bst = Arc::new(barycentric_star_cover(&k));
        let c = covers_isomorphic(&st, &bst).unwrap().unwrap_or_else(|| panic!("{id}"));
        assert!(c.assignment().iter().all(|(a, b)| a == b), "{id}");
    }
    let three = Arc::new(gallery::three_arcs());
    let two = Arc::new(gallery::two_arcs());
    assert!(covers_isomorphic(&three, &two).unwrap().is_none());
    assert_eq!(covers_isomorphic(&three, &three).unwrap().unwrap(), Carrier::identity(three));
}

#[test]
fn carriers_between_arc_covers() {
    let three = Arc::new(gallery::three_arcs());
    let two = Arc::new(gallery::two_arcs());
    let assign: BTreeMap<PieceName, PieceName> =
        [(pn("arc0"), pn("arc1")), (pn("arc1"), pn("arc1")), (pn("arc2"), pn("arc2"))].into();
    let c = Carrier::new(three.clone(), two.clone(), assign).unwrap();
    assert_eq!(c.validate(), Validity::Valid);
    assert_eq!(c.then(&Carrier::identity(two.clone())).unwrap(), c);

    let constant: BTreeMap<PieceName, PieceName> = two.names().map(|n| (n.clone(), pn("arc1"))).collect();
    let constant = Carrier::new(two.clone(), two, constant).unwrap();
    assert!(constant.validate().is_valid());
    assert!(constant.invert().is_none());

    let s = s_carrier(three.clone()).unwrap();
    assert!(s.validate().is_valid());
    assert!(s.invert().is_some());
    for id in suite() {
        let b = b_carrier(suite_cover(&id).unwrap()).unwrap();
        assert!(b.invert().unwrap().validate().is_valid(), "{id}");
    }
}

#[test]
fn carried_and_weakly_carried() {
    let three = gallery::three_arcs();
    let c = Carrier::identity(three.clone());
    let base = three.base().clone();
    let id = SimplicialMap::identity(&base);
    assert!(is_carried(&id, &c).unwrap().holds);
    assert!(is_weakly_carried(&id, &c).unwrap().holds);
    // v6 lies only in arc1
    let to_v6 = SimplicialMap::constant(&base, &base, &v("v6")).unwrap();
    let r = is_carried(&to_v6, &c).unwrap();
    assert!(!r.holds);
    assert_eq!(r.witness.unwrap().piece.unwrap(), pn("arc0"));
    assert!(!is_weakly_carried(&to_v6, &c).unwrap().holds);
}

#[test]
fn cone_construction_on_three_arcs() {
    let three = Arc::new(gallery::three_arcs());
    let s = s_carrier(three.clone()).unwrap();
    let b = b_carrier(three.clone()).unwrap();
    let i = i_carrier(b.codomain().clone(), s.codomain().clone()).unwrap();
    let c = s.then(&i.invert().unwrap()).unwrap();
    assert_eq!(c, b);
    let cones = ConeCertificates::compute(c.codomain()).unwrap();
    let f = carried_map_via_cones(&c, &cones).unwrap();
    assert_eq!(f.source(), &three.base().barycentric_subdivision());
    assert!(is_carried(&f, &c.subdivided()).unwrap().holds);
}

#[test]
fn extension_from_antipodal_vertices() {
    let three = Arc::new(gallery::three_arcs());
    let c = b_carrier(three.clone()).unwrap();
    let cones = ConeCertificates::compute(c.codomain()).unwrap();
    let a = cx(&[&["b(v0)"], &["b(v6)"]]);
    let y = c.codomain().base().clone();
    let f0 = SimplicialMap::new(
        a,
        y,
        [(v("b(v0)"), v("b(arc0,arc2)")), (v("b(v6)"), v("b(arc1,arc2)"))].into(),
    )
    .unwrap();
    let f = extend_carried_map(&f0, &c, &cones).unwrap();
    assert_eq!(f.apply(&v("b(v6)")), &v("b(arc1,arc2)"));
    assert_eq!(f.apply(&v("b(v6,v7)")), &v("b(arc1)"));
    assert!(is_carried(&f, &c.subdivided()).unwrap().holds);

    let whole = extend_carried_map(&f, &c, &cones).unwrap();
    assert_eq!(whole, f);
}

#[test]
fn closeness_and_contiguity() {
    let two = gallery::two_arcs();
    let c12 = two.base().clone();
    let at = |x: &str| SimplicialMap::constant(&c12, &c12, &v(x)).unwrap();
    assert!(g_close(&at("v3"), &at("v3"), &two).unwrap().holds);
    assert!(!g_close(&at("v3"), &at("v9"), &two).unwrap().holds);

    assert!(contiguous(&at("v0"), &at("v1")).unwrap().holds);
    assert!(!contiguous(&at("v0"), &at("v5")).unwrap().holds);
    assert!(contiguity_chain(&at("v0"), &at("v0"), 3).unwrap().unwrap().is_empty());
    assert_eq!(contiguity_chain(&at("v0"), &at("v1"), 3).unwrap().unwrap(), vec![at("v1")]);
}

#[test]
fn bounded_verification_of_three_arcs() {
    let r = verify_n_nerve_theorem(&gallery::three_arcs(), 1).unwrap();
    assert_eq!(r.regularity.overall, Verdict::Holds);
    assert_eq!(r.quasi_iso, QuasiIso::Yes);
    assert_eq!(r.verdict, Verdict::Holds);
}
