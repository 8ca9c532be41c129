use super::{Tree, Vertex};

/// The one or two centers of a tree, by repeated leaf removal.
pub fn tree_centers(t: &Tree) -> Vec<Vertex> {
    let n = t.order();
    if n <= 2 {
        return t.vertices().collect();
    }
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut layer: Vec<Vertex> = t.vertices().filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in t.neighbors(leaf) {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(t: &Tree, colors: &[u8], root: Vertex) -> String {
    let order = t.bfs_order(root, None);
    let mut parent = vec![usize::MAX; t.order()];
    for &v in &order {
        for &w in t.neighbors(v) {
            if w != parent[v] {
                parent[w] = v;
            }
        }
    }
    let mut child_codes: Vec<Vec<String>> = vec![Vec::new(); t.order()];
    let mut code = String::new();
    for &v in order.iter().rev() {
        let mut children = std::mem::take(&mut child_codes[v]);
        children.sort_unstable();
        code = format!("({}{})", colors[v], children.concat());
        if v != root {
            child_codes[parent[v]].push(code.clone());
        }
    }
    code
}

/// AHU-style canonical string of a vertex-colored tree: two colored trees
/// get equal strings iff some isomorphism between them preserves colors.
pub fn canonical_form(t: &Tree, colors: &[u8]) -> String {
    assert_eq!(colors.len(), t.order(), "colors must cover every vertex");
    tree_centers(t)
        .into_iter()
        .map(|c| rooted_code(t, colors, c))
        .min()
        .expect("a tree has a center")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centers() {
        assert_eq!(tree_centers(&Tree::path(5)), vec![2]);
        assert_eq!(tree_centers(&Tree::path(4)), vec![1, 2]);
        assert_eq!(tree_centers(&Tree::star(3)), vec![0]);
        assert_eq!(tree_centers(&Tree::singleton()), vec![0]);
    }

    #[test]
    fn colored_paths() {
        let p3 = Tree::path(3);
        let relabeled = Tree::from_edges(3, [(2, 0), (0, 1)]).unwrap();
        assert_eq!(
            canonical_form(&p3, &[0, 0, 0]),
            canonical_form(&relabeled, &[0, 0, 0])
        );
        assert_ne!(
            canonical_form(&p3, &[1, 0, 0]),
            canonical_form(&p3, &[0, 1, 0])
        );
        assert_eq!(
            canonical_form(&p3, &[1, 0, 0]),
            canonical_form(&p3, &[0, 0, 1])
        );
    }

    #[test]
    fn star_relabelings_agree() {
        let a = Tree::star(3);
        let b = Tree::from_edges(4, [(2, 0), (2, 1), (2, 3)]).unwrap();
        assert_eq!(canonical_form(&a, &[0; 4]), canonical_form(&b, &[0; 4]));
        assert_ne!(
            canonical_form(&a, &[0; 4]),
            canonical_form(&Tree::path(4), &[0; 4])
        );
    }
}
