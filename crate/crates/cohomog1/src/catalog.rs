//! Built-in diagrams drawn from the classification literature.
//!
//! Every entry is a complete [`GroupDiagram`] that the CLI can load by name
//! (`--catalog NAME`), and the names are stable: tests and downstream tooling
//! refer to them literally.

use crate::diagram::GroupDiagram;
use crate::gkm::TorusFamilySpec;
use crate::lie::CompactGroupType;

/// A named diagram together with a one-line provenance note.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub diagram: GroupDiagram,
}

fn group(literal: &str) -> CompactGroupType {
    literal.parse().expect("catalog group literal")
}

/// Line 5 of Alekseevsky-Podesta's table of cohomogeneity-one actions with
/// positive Euler characteristic, for general `n >= 2`:
/// `SO(2n+1) / SO(2n-1)` sits over an interval with isotropy groups
/// `SO(2n)` and `SO(2n-1) x SO(2)`.
pub fn so_odd_line5(n: u32) -> GroupDiagram {
    assert!(n >= 2, "the family starts at n = 2");
    let mut d = GroupDiagram::interval(
        group(&format!("B{n}")),
        group(&format!("D{n}")),
        group(&format!("B{}+T1", n - 1)),
        group(&format!("B{}", n - 1)),
    );
    d.name = Some(format!("so(2n+1)-line5-n{n}"));
    d
}

fn u3_member(name: &str, alpha: [i64; 3]) -> GroupDiagram {
    let mut d = GroupDiagram::interval(group("A2+T1"), group("T3"), group("T3"), group("T2"));
    d.name = Some(name.to_owned());
    d.family = Some(TorusFamilySpec::torus(3, alpha.to_vec()));
    d
}

/// All built-in diagrams, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut n7g = GroupDiagram::interval(group("A2"), group("A1+T1"), group("A1+T1"), group("T2"));
    n7g.name = Some("N7G".to_owned());
    n7g.weyl_order = Some(2);
    n7g.normalizer_order = Some(6);

    let mut n7i =
        GroupDiagram::interval(group("C2"), group("C1xC1"), group("C1xC1"), group("C1+T1"));
    n7i.name = Some("N7I".to_owned());
    n7i.weyl_order = Some(2);
    n7i.normalizer_order = Some(2);

    let mut circle = GroupDiagram::interval(group("T1"), group("T1"), group("T1"), group("T0"));
    circle.name = Some("circle-on-s2".to_owned());

    vec![
        CatalogEntry {
            name: "so(2n+1)-line5-n2",
            description: "SO(5) acting on an 8-manifold with singular isotropy SO(4) and \
                          SO(3)xSO(2); line 5 of Alekseevsky-Podesta's positive-Euler-characteristic \
                          table, at n = 2",
            diagram: so_odd_line5(2),
        },
        CatalogEntry {
            name: "N7G",
            description: "SU(3) acting on a 7-manifold with toral principal isotropy; diagram of \
                          type N7G in Hoelscher's low-dimensional classification",
            diagram: n7g,
        },
        CatalogEntry {
            name: "N7I",
            description: "Sp(2) acting on a 7-manifold with principal isotropy Sp(1)xU(1); diagram \
                          of type N7I in Hoelscher's low-dimensional classification",
            diagram: n7i,
        },
        CatalogEntry {
            name: "u3-M1",
            description: "U(3) acting on an 8-manifold through its maximal torus pair, with \
                          singular weight alpha = x1",
            diagram: u3_member("u3-M1", [1, 0, 0]),
        },
        CatalogEntry {
            name: "u3-M2",
            description: "U(3) acting on an 8-manifold through its maximal torus pair, with \
                          singular weight alpha = x1 + x2 + x3",
            diagram: u3_member("u3-M2", [1, 1, 1]),
        },
        CatalogEntry {
            name: "circle-on-s2",
            description: "the circle rotating the round 2-sphere, fixing the two poles; the \
                          smallest interval diagram",
            diagram: circle,
        },
    ]
}

/// Look up a built-in diagram by its exact name.
pub fn find(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}
