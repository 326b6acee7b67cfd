//! Order-preserving data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature disabled, or with one worker, everything runs on
//! the calling thread. Results are always returned in input order.

/// Number of workers: `FINDOM_WORKERS` if set and positive, else available cores.
pub fn default_workers() -> usize {
    std::env::var("FINDOM_WORKERS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

pub fn map<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if workers > 1 && items.len() > 1 {
            use rayon::prelude::*;
            match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
                Ok(pool) => return pool.install(|| items.par_iter().map(&f).collect()),
                Err(_) => return items.iter().map(f).collect(),
            }
        }
    }
    let _ = workers;
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved_for_any_worker_count() {
        let xs: Vec<u64> = (0..500).collect();
        let seq = map(&xs, 1, |x| x * x + 1);
        for w in [2, 3, 8] {
            assert_eq!(map(&xs, w, |x| x * x + 1), seq);
        }
    }

    #[test]
    fn empty_input() {
        let xs: Vec<u8> = Vec::new();
        assert!(map(&xs, 4, |x| *x).is_empty());
    }
}
