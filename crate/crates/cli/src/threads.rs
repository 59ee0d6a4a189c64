use anyhow::{Context, Result};

/// Sizes the global rayon pool from `BKLAB_THREADS` when set.
pub fn configure_threads() -> Result<usize> {
    if let Ok(v) = std::env::var("BKLAB_THREADS") {
        let n: usize = v.trim().parse().with_context(|| format!("BKLAB_THREADS={v:?} is not a count"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .context("configuring the thread pool")?;
    }
    Ok(rayon::current_num_threads())
}
