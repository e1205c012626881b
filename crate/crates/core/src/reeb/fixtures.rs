//! Height functions on small triangulated surfaces.

use super::mesh::TriSurfaceFn;

/// Octahedron with `f = z + 0.1 x + 0.01 y`: one minimum, one maximum.
pub fn octahedron() -> TriSurfaceFn {
    let coords = [(0.0, 0.0, 1.0), (0.0, 0.0, -1.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (-1.0, 0.0, 0.0), (0.0, -1.0, 0.0)];
    let verts: Vec<(u32, f64)> =
        coords.iter().enumerate().map(|(i, &(x, y, z))| (i as u32, z + 0.1 * x + 0.01 * y)).collect();
    let tris = [[0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 2], [1, 3, 2], [1, 4, 3], [1, 5, 4], [1, 2, 5]];
    TriSurfaceFn::new(&verts, &tris).expect("valid octahedron")
}

/// Hexagonal bipyramid shaped like a pear: two minima on the equator, a
/// saddle at the south pole and the maximum at the north pole.
pub fn pear() -> TriSurfaceFn {
    let equator = [0.0, 0.6, 0.7, 0.1, 0.65, 0.75];
    let (south, north) = (6u32, 7u32);
    let mut verts: Vec<(u32, f64)> = equator.iter().enumerate().map(|(i, &f)| (i as u32, f)).collect();
    verts.push((south, 0.5));
    verts.push((north, 1.0));
    let mut tris = Vec::new();
    for i in 0..6u32 {
        let j = (i + 1) % 6;
        tris.push([north, i, j]);
        tris.push([south, j, i]);
    }
    TriSurfaceFn::new(&verts, &tris).expect("valid bipyramid")
}

/// Square-grid torus standing upright, with height `(R + r cos v) cos u`
/// slightly tilted so the grid has exactly one minimum, two saddles and one
/// maximum.
pub fn grid_torus() -> TriSurfaceFn {
    let (m, n) = (8usize, 6usize);
    let (big, small) = (2.0f64, 1.0f64);
    let index = |i: usize, j: usize| ((i % m) * n + (j % n)) as u32;
    let mut verts = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            let u = std::f64::consts::TAU * (i as f64 + 0.05) / m as f64;
            let v = std::f64::consts::TAU * (j as f64 + 0.1) / n as f64;
            let h = (big + small * v.cos()) * u.cos() + 0.01 * v.sin() + 0.001 * (i * n + j) as f64;
            verts.push((index(i, j), h));
        }
    }
    let mut tris = Vec::with_capacity(2 * m * n);
    for i in 0..m {
        for j in 0..n {
            let (a, b, c, d) = (index(i, j), index(i + 1, j), index(i + 1, j + 1), index(i, j + 1));
            tris.push([a, b, c]);
            tris.push([a, c, d]);
        }
    }
    TriSurfaceFn::new(&verts, &tris).expect("valid grid torus")
}

/// The 7-vertex torus with `f(i) = i`.
pub fn csaszar_torus() -> TriSurfaceFn {
    let verts: Vec<(u32, f64)> = (0..7).map(|i| (i, i as f64)).collect();
    let tris: Vec<[u32; 3]> =
        (0..7).flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 3) % 7, (i + 2) % 7]]).collect();
    TriSurfaceFn::new(&verts, &tris).expect("valid torus")
}
