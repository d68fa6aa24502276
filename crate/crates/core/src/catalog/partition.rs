use crate::error::{Error, Result};

/// Complementary partition inside the `k x (n-k)` box:
/// `dual[i] = (n - k) - lambda[k - 1 - i]`.
pub fn dual_partition(lambda: &[u32], k: u32, n: u32) -> Result<Vec<u32>> {
    if k == 0 || k > n {
        return Err(Error::Partition(format!(
            "need 0 < k <= n, got k={k}, n={n}"
        )));
    }
    if lambda.len() != k as usize {
        return Err(Error::Partition(format!(
            "partition {lambda:?} has {} parts, expected {k}",
            lambda.len()
        )));
    }
    let width = n - k;
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Partition(format!(
            "{lambda:?} is not weakly decreasing"
        )));
    }
    if lambda.iter().any(|&p| p > width) {
        return Err(Error::Partition(format!(
            "{lambda:?} does not fit in a {k} x {width} box"
        )));
    }
    Ok(lambda.iter().rev().map(|&p| width - p).collect())
}

/// Transposed Young diagram.
pub fn conjugate(lambda: &[u32]) -> Vec<u32> {
    let first = lambda.first().copied().unwrap_or(0);
    (1..=first)
        .map(|j| lambda.iter().filter(|&&p| p >= j).count() as u32)
        .collect()
}

/// Rewrites every `(p,q,...)^*` partition label inside a locus name by its
/// conjugate. `G(k,n)` and `G(n-k,n)` are identified by transposing
/// partitions, so this is the induced action on named loci.
pub fn conjugate_locus_name(name: &str) -> String {
    let mut out = String::with_capacity(name.len());
    let mut rest = name;
    while let Some(open) = rest.find('(') {
        let (head, tail) = rest.split_at(open);
        out.push_str(head);
        let parsed = tail.find(")^*").and_then(|close| {
            let parts: Option<Vec<u32>> = tail[1..close]
                .split(',')
                .map(|p| p.trim().parse().ok())
                .collect();
            parts.map(|p| (p, close))
        });
        match parsed {
            Some((parts, close)) if parts.windows(2).all(|w| w[0] >= w[1]) => {
                let conj: Vec<String> = conjugate(&parts).iter().map(u32::to_string).collect();
                out.push('(');
                out.push_str(&conj.join(","));
                out.push(')');
                rest = &tail[close + 1..];
            }
            _ => {
                out.push('(');
                rest = &tail[1..];
            }
        }
    }
    out.push_str(rest);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_examples() {
        assert_eq!(dual_partition(&[0, 0], 2, 5).unwrap(), vec![3, 3]);
        assert_eq!(dual_partition(&[1, 0], 2, 4).unwrap(), vec![2, 1]);
        let once = dual_partition(&[2, 1], 2, 5).unwrap();
        assert_eq!(dual_partition(&once, 2, 5).unwrap(), vec![2, 1]);
    }

    #[test]
    fn dual_rejects_malformed() {
        assert!(dual_partition(&[1, 2], 2, 5).is_err());
        assert!(dual_partition(&[4, 0], 2, 5).is_err());
        assert!(dual_partition(&[1], 2, 5).is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&[1, 1, 1]), vec![3]);
        assert_eq!(conjugate(&[2, 2, 1]), vec![3, 2]);
        assert_eq!(conjugate(&[2, 2]), vec![2, 2]);
        assert_eq!(conjugate(&[2, 1]), vec![2, 1]);
        assert_eq!(conjugate(&[]), Vec::<u32>::new());
    }

    #[test]
    fn locus_names() {
        assert_eq!(conjugate_locus_name("C[(1,1,1)^*]"), "C[(3)^*]");
        assert_eq!(conjugate_locus_name("C[(2,2,1)^*]"), "C[(3,2)^*]");
        assert_eq!(conjugate_locus_name("Q((1,1)^*)L"), "Q((2)^*)L");
        assert_eq!(conjugate_locus_name("Q[(1)^*]"), "Q[(1)^*]");
        assert_eq!(conjugate_locus_name("boundary"), "boundary");
        assert_eq!(conjugate_locus_name("odd (x)"), "odd (x)");
    }
}
