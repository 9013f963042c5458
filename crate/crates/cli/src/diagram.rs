//! SVG drawings of shuffle walks and bracket insertions.
//!
//! A `(p,q)`-shuffle is drawn as a lattice walk from `(0,0)` to `(p,q)`:
//! a right step places the next `x` entry, an up step the next `y` entry.
//! Every unit block under the walk is a pair `(x_i, y_j)` with `x_i` placed
//! after `y_j`, and these blocks are shaded. For a bracket term the chosen
//! lower-right corner is cut by a diagonal, which stands for the merged
//! entry `[x_i, y_j]`.

use std::fmt::Write;

use barss_core::bar::Walk;

const CELL: usize = 40;
const MARGIN: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramKind {
    Shuffle,
    BracketShuffle,
}

impl DiagramKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagramKind::Shuffle => "shuffle",
            DiagramKind::BracketShuffle => "bracket-shuffle",
        }
    }
}

/// How a walk is picked out of the `(p,q)`-shuffles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WalkSelection {
    /// Position in enumeration order (right steps explored first).
    Index(usize),
    /// An explicit `R`/`U` string.
    Steps(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub kind: DiagramKind,
    pub walk: Walk,
    /// The 1-based position `i` of the corner: entries `i` and `i+1` of the
    /// shuffled word are an `x` followed by a `y`.
    pub corner: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct SelectionError(pub String);

impl Diagram {
    /// Resolves a selection; for bracket diagrams a missing corner is
    /// accepted only when the walk has exactly one.
    pub fn select(
        kind: DiagramKind,
        p: usize,
        q: usize,
        walk: &WalkSelection,
        corner: Option<usize>,
    ) -> Result<Diagram, SelectionError> {
        let walk = match walk {
            WalkSelection::Index(i) => {
                let all = Walk::all(p, q);
                let count = all.len();
                all.into_iter().nth(*i).ok_or_else(|| {
                    SelectionError(format!("walk index {i} is out of range; ({p},{q}) has {count} shuffles"))
                })?
            }
            WalkSelection::Steps(s) => {
                let w: Walk = s.parse().map_err(|e: barss_core::Error| SelectionError(e.to_string()))?;
                if (w.p(), w.q()) != (p, q) {
                    return Err(SelectionError(format!(
                        "walk {s} goes to ({}, {}), not ({p}, {q})",
                        w.p(),
                        w.q()
                    )));
                }
                w
            }
        };
        let corners: Vec<usize> = walk.corners().iter().map(|c| c + 1).collect();
        let corner = match (kind, corner) {
            (DiagramKind::Shuffle, None) => None,
            (DiagramKind::Shuffle, Some(_)) => {
                return Err(SelectionError("--corner only applies to bracket-shuffle diagrams".into()))
            }
            (DiagramKind::BracketShuffle, Some(i)) if corners.contains(&i) => Some(i),
            (DiagramKind::BracketShuffle, Some(i)) => {
                return Err(SelectionError(format!("walk {walk} has no corner at {i}; corners: {corners:?}")))
            }
            (DiagramKind::BracketShuffle, None) if corners.len() == 1 => Some(corners[0]),
            (DiagramKind::BracketShuffle, None) => {
                return Err(SelectionError(format!("walk {walk} needs --corner; corners: {corners:?}")))
            }
        };
        Ok(Diagram { kind, walk, corner })
    }

    /// Unit blocks under the walk, by lower-left lattice point.
    pub fn shaded_blocks(&self) -> Vec<(usize, usize)> {
        self.walk.crossings()
    }

    /// Lattice points visited by the walk, with the corner point cut out.
    fn path(&self) -> Vec<(usize, usize)> {
        let mut points = vec![(0, 0)];
        let (mut x, mut y) = (0, 0);
        for &up in self.walk.steps() {
            if up {
                y += 1;
            } else {
                x += 1;
            }
            points.push((x, y));
        }
        // The corner's right step is step i−1, so its end point is point i.
        if let Some(i) = self.corner {
            points.remove(i);
        }
        points
    }

    pub fn to_svg(&self) -> String {
        let (p, q) = (self.walk.p(), self.walk.q());
        let width = 2 * MARGIN + CELL * p;
        let height = 2 * MARGIN + CELL * q;
        let at = |i: usize, j: usize| (MARGIN + CELL * i, MARGIN + CELL * (q - j));

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        let title = match self.corner {
            Some(i) => format!("{} {} in ({p},{q}), corner {i}", self.kind.as_str(), self.walk),
            None => format!("{} {} in ({p},{q})", self.kind.as_str(), self.walk),
        };
        let _ = writeln!(s, "  <title>{title}</title>");
        let _ = writeln!(s, r#"  <rect width="{width}" height="{height}" fill="white"/>"#);

        let _ = writeln!(s, r##"  <g class="blocks" fill="#c8c8c8">"##);
        for (i, j) in self.shaded_blocks() {
            let (x, y) = at(i, j + 1);
            let _ = writeln!(s, r#"    <rect x="{x}" y="{y}" width="{CELL}" height="{CELL}"/>"#);
        }
        let _ = writeln!(s, "  </g>");

        let _ = writeln!(s, r##"  <g class="grid" stroke="#999999" stroke-width="1">"##);
        for i in 0..=p {
            let ((x1, y1), (x2, y2)) = (at(i, 0), at(i, q));
            let _ = writeln!(s, r#"    <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
        }
        for j in 0..=q {
            let ((x1, y1), (x2, y2)) = (at(0, j), at(p, j));
            let _ = writeln!(s, r#"    <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
        }
        let _ = writeln!(s, "  </g>");

        let points: Vec<String> = self
            .path()
            .into_iter()
            .map(|(i, j)| {
                let (x, y) = at(i, j);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            s,
            r#"  <polyline class="walk" points="{}" fill="none" stroke="black" stroke-width="3"/>"#,
            points.join(" ")
        );

        if let Some(i) = self.corner {
            let (k, l) = self.walk.counts_before(i - 1);
            let ((x1, y1), (x2, y2)) = (at(k, l), at(k + 1, l + 1));
            let _ = writeln!(
                s,
                r##"  <line class="corner" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#c00000" stroke-width="3"/>"##
            );
            let (cx, cy) = at(k + 1, l);
            let _ = writeln!(
                s,
                r##"  <circle class="corner" cx="{cx}" cy="{cy}" r="5" fill="none" stroke="#c00000" stroke-width="2"/>"##
            );
        }

        let _ = writeln!(s, r#"  <g class="labels" font-family="monospace" font-size="12" text-anchor="middle">"#);
        for i in 0..p {
            let (x, y) = at(i, 0);
            let _ = writeln!(s, r#"    <text x="{}" y="{}">x{}</text>"#, x + CELL / 2, y + 18, i + 1);
        }
        for j in 0..q {
            let (x, y) = at(0, j);
            let _ = writeln!(s, r#"    <text x="{}" y="{}">y{}</text>"#, x - 14, y - CELL / 2 + 4, j + 1);
        }
        let _ = writeln!(s, "  </g>");
        s.push_str("</svg>\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn select(kind: DiagramKind, p: usize, q: usize, walk: &str, corner: Option<usize>) -> Diagram {
        Diagram::select(kind, p, q, &WalkSelection::Steps(walk.into()), corner).unwrap()
    }

    #[test]
    fn identity_walk_has_no_blocks() {
        let d = Diagram::select(DiagramKind::Shuffle, 3, 2, &WalkSelection::Index(0), None).unwrap();
        assert_eq!(d.walk.to_string(), "RRRUU");
        assert!(d.shaded_blocks().is_empty());
        assert_eq!(d.path()[3], (3, 0));
    }

    #[test]
    fn crossing_walk_blocks() {
        let d = select(DiagramKind::Shuffle, 3, 2, "RUURR", None);
        assert_eq!(d.shaded_blocks(), vec![(1, 0), (1, 1), (2, 0), (2, 1)]);
        assert_eq!(d.to_svg().matches("<rect x=").count(), 4);
    }

    #[test]
    fn unique_corner_is_implied() {
        let d = Diagram::select(DiagramKind::BracketShuffle, 1, 1, &WalkSelection::Steps("RU".into()), None).unwrap();
        assert_eq!(d.corner, Some(1));
        assert_eq!(d.path(), vec![(0, 0), (1, 1)]);
        let svg = d.to_svg();
        assert_eq!(svg.matches("class=\"corner\"").count(), 2);
    }

    #[test]
    fn bad_selections() {
        let e = Diagram::select(DiagramKind::Shuffle, 3, 2, &WalkSelection::Index(10), None).unwrap_err();
        assert!(e.0.contains("has 10 shuffles"));
        let e = Diagram::select(DiagramKind::BracketShuffle, 3, 2, &WalkSelection::Steps("RUURR".into()), Some(2));
        assert!(e.is_err());
        let e = Diagram::select(DiagramKind::BracketShuffle, 2, 2, &WalkSelection::Steps("RURU".into()), None);
        assert!(e.unwrap_err().0.contains("needs --corner"));
        let e = Diagram::select(DiagramKind::Shuffle, 3, 2, &WalkSelection::Steps("RUR".into()), None);
        assert!(e.is_err());
    }
}
