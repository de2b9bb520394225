//! Deterministic fork-join over independently seeded work items.
//!
//! Work is split into fixed-size chunks regardless of how many threads
//! run; workers pull chunk indices from a shared counter, and partial
//! results are merged strictly in chunk order afterwards. Together with
//! per-item seeding this makes every parallel result bit-identical to the
//! single-threaded one.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

/// Items per chunk. Fixed so that the chunk decomposition (and therefore
/// the merge order) never depends on the thread count.
pub const CHUNK_SIZE: u64 = 4096;

/// Worker threads to use: the `COMB_THREADS` environment variable if set,
/// otherwise the available parallelism.
pub fn thread_count() -> usize {
    if let Ok(v) = std::env::var("COMB_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Map `0..n_items` through `item` into per-chunk accumulators and merge
/// the chunk results in index order.
pub fn chunked_reduce<A, Make, Item, Merge>(n_items: u64, make: Make, item: Item, merge: Merge) -> A
where
    A: Send,
    Make: Fn() -> A + Sync,
    Item: Fn(&mut A, u64) + Sync,
    Merge: Fn(A, A) -> A,
{
    let n_chunks = n_items.div_ceil(CHUNK_SIZE).max(1);
    let threads = thread_count().min(n_chunks as usize).max(1);
    let next_chunk = AtomicU64::new(0);
    let partials: Mutex<Vec<Option<A>>> = Mutex::new((0..n_chunks).map(|_| None).collect());

    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let chunk = next_chunk.fetch_add(1, Ordering::Relaxed);
                if chunk >= n_chunks {
                    break;
                }
                let start = chunk * CHUNK_SIZE;
                let end = (start + CHUNK_SIZE).min(n_items);
                let mut acc = make();
                for index in start..end {
                    item(&mut acc, index);
                }
                partials.lock().expect("poisoned partials")[chunk as usize] = Some(acc);
            });
        }
    });

    partials
        .into_inner()
        .expect("poisoned partials")
        .into_iter()
        .map(|slot| slot.expect("chunk never ran"))
        .reduce(merge)
        .unwrap_or_else(make)
}
