//! Bounded worker pool: workers pull task indices and send back results
//! over a channel; the caller reassembles them in task order.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::thread;

/// Apply `work` to every task on at most `jobs` threads. The output is in
/// task order regardless of completion order.
pub fn run_ordered<T, R, F>(tasks: &[T], jobs: usize, work: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = jobs.clamp(1, tasks.len().max(1));
    if workers == 1 {
        return tasks.iter().map(work).collect();
    }
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel();
    thread::scope(|scope| {
        for _ in 0..workers {
            let tx = tx.clone();
            let (next, work) = (&next, &work);
            scope.spawn(move || loop {
                let index = next.fetch_add(1, Ordering::Relaxed);
                let Some(task) = tasks.get(index) else { break };
                if tx.send((index, work(task))).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        let mut slots: Vec<Option<R>> = (0..tasks.len()).map(|_| None).collect();
        for (index, result) in rx {
            slots[index] = Some(result);
        }
        slots
            .into_iter()
            .map(|slot| slot.expect("every task reports exactly once"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Duration;

    #[test]
    fn order_is_task_order() {
        let tasks: Vec<u64> = (0..40).collect();
        let out = run_ordered(&tasks, 6, |&t| {
            thread::sleep(Duration::from_micros((40 - t) * 50));
            t * t
        });
        assert_eq!(out, tasks.iter().map(|t| t * t).collect::<Vec<_>>());
    }

    #[test]
    fn degenerate_widths() {
        let tasks = [1, 2, 3];
        assert_eq!(run_ordered(&tasks, 0, |&t| t + 1), vec![2, 3, 4]);
        assert_eq!(run_ordered(&tasks, 99, |&t| t + 1), vec![2, 3, 4]);
        assert!(run_ordered(&[] as &[i32], 4, |&t| t).is_empty());
    }
}
