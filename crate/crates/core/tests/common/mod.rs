//! Naive reference implementations, written from the definitions with no
//! shared code beyond reading adjacency out of `Graph`.
#![allow(dead_code)]

use betweenness::Graph;

pub const INF: usize = usize::MAX / 4;

pub struct Naive {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
    pub d: Vec<Vec<usize>>,
}

impl Naive {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let adj: Vec<Vec<bool>> = (0..n)
            .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
            .collect();
        // Floyd-Warshall
        let mut d = vec![vec![INF; n]; n];
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    d[u][v] = 0;
                } else if adj[u][v] {
                    d[u][v] = 1;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        Naive { n, adj, d }
    }

    fn closed(&self, a: usize, b: usize) -> bool {
        a == b || self.adj[a][b]
    }

    /// For all u and edges vw with d(u,v) = d(u,w) = k >= 1 there is a
    /// common neighbour x of v and w with d(u,x) = k - 1.
    pub fn tc(&self) -> bool {
        let n = self.n;
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    if !self.adj[v][w] || self.d[u][v] != self.d[u][w] || self.d[u][v] == 0 {
                        continue;
                    }
                    let k = self.d[u][v];
                    let ok =
                        (0..n).any(|x| self.adj[x][v] && self.adj[x][w] && self.d[u][x] == k - 1);
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// For all u, z and distinct non-adjacent v, w adjacent to z with
    /// d(u,v) = d(u,w) = d(u,z) - 1 = k there is a common neighbour x of
    /// v and w with d(u,x) = k - 1.
    pub fn qc(&self) -> bool {
        let n = self.n;
        for u in 0..n {
            for z in 0..n {
                for v in 0..n {
                    for w in 0..n {
                        if v == w || self.adj[v][w] || !self.adj[z][v] || !self.adj[z][w] {
                            continue;
                        }
                        let k = self.d[u][v];
                        if self.d[u][w] != k || self.d[u][z] != k + 1 || k == 0 {
                            continue;
                        }
                        let ok = (0..n)
                            .any(|x| self.adj[x][v] && self.adj[x][w] && self.d[u][x] == k - 1);
                        if !ok {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// For all u and edges vw with d(u,v) = d(u,w) = k >= 1, the set Z of
    /// common neighbours at level k - 1 is nonempty; with `joint`, every
    /// x ~ v and y ~ w at level k - 1 admit one z in Z with z in N[x] and
    /// z in N[y]; otherwise each x and each y separately has some z in Z
    /// within its closed neighbourhood.
    pub fn tdc(&self, joint: bool) -> bool {
        let n = self.n;
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    if !self.adj[v][w] || self.d[u][v] != self.d[u][w] || self.d[u][v] == 0 {
                        continue;
                    }
                    let k = self.d[u][v];
                    let zs: Vec<usize> = (0..n)
                        .filter(|&z| self.adj[z][v] && self.adj[z][w] && self.d[u][z] == k - 1)
                        .collect();
                    if zs.is_empty() {
                        return false;
                    }
                    let xs: Vec<usize> = (0..n)
                        .filter(|&x| self.adj[x][v] && self.d[u][x] == k - 1)
                        .collect();
                    let ys: Vec<usize> = (0..n)
                        .filter(|&y| self.adj[y][w] && self.d[u][y] == k - 1)
                        .collect();
                    if joint {
                        for &x in &xs {
                            for &y in &ys {
                                if !zs.iter().any(|&z| self.closed(z, x) && self.closed(z, y)) {
                                    return false;
                                }
                            }
                        }
                    } else {
                        let covers = |a: usize| zs.iter().any(|&z| self.closed(z, a));
                        if !xs.iter().all(|&x| covers(x)) || !ys.iter().all(|&y| covers(y)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Union of the vertex sets of all shortest u-v paths, found by
    /// enumerating every simple path of length d(u,v).
    pub fn geodesic_union(&self, u: usize, v: usize) -> Vec<usize> {
        let target = self.d[u][v];
        let mut on = vec![false; self.n];
        if target >= INF {
            return Vec::new();
        }
        let mut path = vec![u];
        self.walk(v, target, &mut path, &mut on);
        (0..self.n).filter(|&x| on[x]).collect()
    }

    fn walk(&self, v: usize, target: usize, path: &mut Vec<usize>, on: &mut [bool]) {
        let last = *path.last().unwrap();
        if path.len() - 1 == target {
            if last == v {
                for &x in path.iter() {
                    on[x] = true;
                }
            }
            return;
        }
        for next in 0..self.n {
            if self.adj[last][next] && !path.contains(&next) {
                path.push(next);
                self.walk(v, target, path, on);
                path.pop();
            }
        }
    }
}
