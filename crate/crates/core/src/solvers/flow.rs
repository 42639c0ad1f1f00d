//! Dinic max-flow with a lower-bound feasibility transform, backing the
//! polygamous-matching primitive.

#[derive(Clone)]
struct Edge {
    to: usize,
    cap: i64,
    rev: usize,
}

struct Dinic {
    graph: Vec<Vec<Edge>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic { graph: vec![Vec::new(); n], level: vec![0; n], iter: vec![0; n] }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: i64) -> (usize, usize) {
        let handle = (from, self.graph[from].len());
        let rev_from = self.graph[to].len();
        let rev_to = self.graph[from].len();
        self.graph[from].push(Edge { to, cap, rev: rev_from });
        self.graph[to].push(Edge { to: from, cap: 0, rev: rev_to });
        handle
    }

    fn flow_on(&self, handle: (usize, usize)) -> i64 {
        // residual capacity of the reverse edge equals the pushed flow
        let e = &self.graph[handle.0][handle.1];
        self.graph[e.to][e.rev].cap
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(-1);
        let mut queue = std::collections::VecDeque::new();
        self.level[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for e in &self.graph[v] {
                if e.cap > 0 && self.level[e.to] < 0 {
                    self.level[e.to] = self.level[v] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize, f: i64) -> i64 {
        if v == t {
            return f;
        }
        while self.iter[v] < self.graph[v].len() {
            let (to, cap, rev) = {
                let e = &self.graph[v][self.iter[v]];
                (e.to, e.cap, e.rev)
            };
            if cap > 0 && self.level[v] < self.level[to] {
                let d = self.dfs(to, t, f.min(cap));
                if d > 0 {
                    self.graph[v][self.iter[v]].cap -= d;
                    self.graph[to][rev].cap += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.fill(0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }
}

/// Selects one incident edge per left node so that each right node `w` ends
/// up with between `alpha[w]` and `beta[w]` selected edges. Returns the
/// chosen right node per left node, or `None` if no selection exists.
pub fn polygamous_matching(
    left: usize,
    right: usize,
    edges: &[(usize, usize)],
    alpha: &[u64],
    beta: &[u64],
) -> Option<Vec<usize>> {
    assert_eq!(alpha.len(), right);
    assert_eq!(beta.len(), right);
    if alpha.iter().zip(beta).any(|(a, b)| a > b) {
        return None;
    }
    if (0..right).map(|w| alpha[w]).sum::<u64>() > left as u64 {
        return None;
    }

    // circulation with lower bounds: s -> u [1,1], u -> w [0,1],
    // w -> t [alpha, beta], t -> s unbounded; feasible iff the super
    // source/sink flow saturates all deficits
    let s = left + right;
    let t = s + 1;
    let ss = t + 1;
    let tt = ss + 1;
    let mut net = Dinic::new(tt + 1);
    let mut excess = vec![0i64; tt + 1];

    for u in 0..left {
        // lower bound 1, upper 1: zero residual capacity
        excess[u] += 1;
        excess[s] -= 1;
    }
    let mut edge_handles = Vec::with_capacity(edges.len());
    for &(u, w) in edges {
        assert!(u < left && w < right);
        edge_handles.push(net.add_edge(u, left + w, 1));
    }
    for w in 0..right {
        net.add_edge(left + w, t, (beta[w] - alpha[w]) as i64);
        excess[t] += alpha[w] as i64;
        excess[left + w] -= alpha[w] as i64;
    }
    net.add_edge(t, s, i64::MAX / 2);

    let mut need = 0;
    for v in 0..=t {
        if excess[v] > 0 {
            net.add_edge(ss, v, excess[v]);
            need += excess[v];
        } else if excess[v] < 0 {
            net.add_edge(v, tt, -excess[v]);
        }
    }
    if net.max_flow(ss, tt) != need {
        return None;
    }

    let mut assignment = vec![usize::MAX; left];
    for (&(u, w), &handle) in edges.iter().zip(&edge_handles) {
        if net.flow_on(handle) > 0 {
            assignment[u] = w;
        }
    }
    debug_assert!(assignment.iter().all(|&w| w != usize::MAX));
    Some(assignment)
}
