//! Named graph families used as fixtures by tests, experiments and the CLI.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::products::{product, ProductKind};

fn too_small(what: &str, min: usize, got: usize) -> Error {
    Error::InvalidParameter(format!("{what} needs n >= {min}, got {got}"))
}

/// `P_n` on `0..n` with edges `i(i+1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(too_small("path", 1, n));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(too_small("cycle", 3, n));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(too_small("complete graph", 1, n));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Star on `n` vertices: center 0 joined to leaves `1..n` (so `star(4)` is `K_{1,3}`).
pub fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(too_small("star", 1, n));
    }
    Graph::new(n, (1..n).map(|i| (0, i)))
}

/// Petersen graph: outer 5-cycle `0..5`, spokes `i — i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).expect("static construction")
}

/// Block graph `B_t`: path `v_1..v_{2t}` (ids `0..2t`) plus `u_1..u_{t-1}`
/// (ids `2t..3t-1`), where `u_i` is joined to `v_{2i}` and `v_{2i+1}`.
pub fn b_t(t: usize) -> Result<Graph> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("B_t needs t >= 2, got {t}")));
    }
    let n = 3 * t - 1;
    let mut edges: Vec<(Vertex, Vertex)> = (1..2 * t).map(|i| (i - 1, i)).collect();
    for i in 1..t {
        let u = 2 * t - 1 + i;
        edges.push((u, 2 * i - 1));
        edges.push((u, 2 * i));
    }
    Graph::new(n, edges)
}

/// The order-7 tree `T*`: path `v_1..v_6` (ids `0..6`) with a pendant
/// vertex `w` (id 6) on `v_3`.
pub fn t_star() -> Graph {
    Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]).expect("static construction")
}

/// `T* □ P_{2n}`; vertex `(g, h)` has id `g * 2n + h`.
pub fn t_star_times_even_path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(too_small("T* x P_2n", 1, n));
    }
    Ok(product(ProductKind::Cartesian, &t_star(), &path(2 * n)?))
}

/// The grid `P_{2n} □ P_{2n}`; cell `(i, j)` (0-based) has id `i * 2n + j`.
pub fn even_grid(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(too_small("grid", 1, n));
    }
    let side = path(2 * n)?;
    Ok(product(ProductKind::Cartesian, &side, &side))
}

/// `P_{2n} □ P_{2n}` with the single edge `e = (a, b)` removed.
pub fn grid_minus_edge(n: usize, e: (Vertex, Vertex)) -> Result<Graph> {
    even_grid(n)?.without_edge(e.0, e.1)
}

/// Hamming graph `K_n □ K_n`.
pub fn hamming(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(too_small("Hamming graph", 2, n));
    }
    let k = complete(n)?;
    Ok(product(ProductKind::Cartesian, &k, &k))
}

/// Looks a family up by CLI name. `param` is the family's size parameter.
pub fn by_name(name: &str, param: Option<usize>) -> Result<Graph> {
    let need = |p: Option<usize>| {
        p.ok_or_else(|| Error::InvalidParameter(format!("family {name} needs --param")))
    };
    match name {
        "path" => path(need(param)?),
        "cycle" => cycle(need(param)?),
        "complete" => complete(need(param)?),
        "star" => star(need(param)?),
        "petersen" => Ok(petersen()),
        "b_t" | "bt" => b_t(need(param)?),
        "t_star" | "tstar" => Ok(t_star()),
        "t_star_times_even_path" | "tstar_path" => t_star_times_even_path(need(param)?),
        "grid" => even_grid(need(param)?),
        "hamming" => hamming(need(param)?),
        other => Err(Error::InvalidParameter(format!("unknown family {other}"))),
    }
}

pub const FAMILY_NAMES: &[&str] = &[
    "path",
    "cycle",
    "complete",
    "star",
    "petersen",
    "b_t",
    "t_star",
    "t_star_times_even_path",
    "grid",
    "hamming",
];
