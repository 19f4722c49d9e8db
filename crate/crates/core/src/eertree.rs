//! Palindromic tree (eertree): one node per distinct nonempty palindromic
//! factor, built online in amortized linear time.

struct Node {
    len: isize,
    suffix_link: usize,
    /// End position (exclusive) of the first occurrence.
    end: usize,
    edges: Vec<(u8, usize)>,
}

impl Node {
    fn child(&self, c: u8) -> Option<usize> {
        self.edges.iter().find(|&&(s, _)| s == c).map(|&(_, n)| n)
    }
}

pub struct Eertree {
    nodes: Vec<Node>,
}

const IMAGINARY: usize = 0; // length -1
const EMPTY: usize = 1; // length 0

impl Eertree {
    pub fn build(s: &[u8]) -> Self {
        let mut nodes = vec![
            Node {
                len: -1,
                suffix_link: IMAGINARY,
                end: 0,
                edges: Vec::new(),
            },
            Node {
                len: 0,
                suffix_link: IMAGINARY,
                end: 0,
                edges: Vec::new(),
            },
        ];
        let mut last = EMPTY;
        for (i, &c) in s.iter().enumerate() {
            let fits = |nodes: &[Node], v: usize| {
                let start = i as isize - nodes[v].len - 1;
                start >= 0 && s[start as usize] == c
            };
            let mut cur = last;
            while !fits(&nodes, cur) {
                cur = nodes[cur].suffix_link;
            }
            if let Some(existing) = nodes[cur].child(c) {
                last = existing;
                continue;
            }
            let len = nodes[cur].len + 2;
            let suffix_link = if len == 1 {
                EMPTY
            } else {
                let mut v = nodes[cur].suffix_link;
                while !fits(&nodes, v) {
                    v = nodes[v].suffix_link;
                }
                nodes[v].child(c).expect("suffix palindrome already present")
            };
            nodes.push(Node {
                len,
                suffix_link,
                end: i + 1,
                edges: Vec::new(),
            });
            let new = nodes.len() - 1;
            nodes[cur].edges.push((c, new));
            last = new;
        }
        Self { nodes }
    }

    /// Number of distinct nonempty palindromic factors.
    pub fn count(&self) -> usize {
        self.nodes.len() - 2
    }

    /// `(start, end)` of the first occurrence of every distinct palindrome.
    pub fn spans(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nodes[2..]
            .iter()
            .map(|n| (n.end - n.len as usize, n.end))
    }
}
