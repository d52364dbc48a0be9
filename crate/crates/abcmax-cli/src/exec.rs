//! Thread-per-shard executor for the library's sharded scans.

use abcmax::{ShardExecutor, ShardPartial};
use std::thread;

/// Runs each shard on its own OS thread and collects results in shard order,
/// so output is identical to the sequential executor's.
pub struct ThreadedExecutor;

impl ShardExecutor for ThreadedExecutor {
    fn run(&self, shards: usize, job: &(dyn Fn(usize) -> ShardPartial + Sync)) -> Vec<ShardPartial> {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..shards)
                .map(|s| scope.spawn(move || job(s)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("shard worker panicked"))
                .collect()
        })
    }
}

/// Executor picked from the shard count: one shard runs inline, more fan out.
pub enum AutoExecutor {
    Sequential(abcmax::SequentialExecutor),
    Threaded(ThreadedExecutor),
}

impl AutoExecutor {
    pub fn for_shards(shards: usize) -> AutoExecutor {
        if shards > 1 {
            AutoExecutor::Threaded(ThreadedExecutor)
        } else {
            AutoExecutor::Sequential(abcmax::SequentialExecutor)
        }
    }
}

impl ShardExecutor for AutoExecutor {
    fn run(&self, shards: usize, job: &(dyn Fn(usize) -> ShardPartial + Sync)) -> Vec<ShardPartial> {
        match self {
            AutoExecutor::Sequential(e) => e.run(shards, job),
            AutoExecutor::Threaded(e) => e.run(shards, job),
        }
    }
}

// ===== tests =====

#[cfg(test)]
mod tests {
    use super::*;
    use abcmax::{max_abc_over_class, EnumerationTask, ParamConstraint, ParamKind, SequentialExecutor};

    #[test]
    fn threads_match_sequential_bitwise() {
        let c = ParamConstraint::new(ParamKind::Independence, 2).unwrap();
        let seq = max_abc_over_class(
            &EnumerationTask::new(6, Some(c), 1).unwrap(),
            &SequentialExecutor,
        )
        .unwrap();
        for shards in [2usize, 5, 16] {
            let task = EnumerationTask::new(6, Some(c), shards).unwrap();
            let par = max_abc_over_class(&task, &ThreadedExecutor).unwrap();
            assert_eq!(par.class_size, seq.class_size);
            assert_eq!(par.max_value, seq.max_value, "bitwise identical");
            assert_eq!(par.labeled_maximizers, seq.labeled_maximizers);
            assert_eq!(par.runner_up_gap, seq.runner_up_gap);
        }
    }
}
