"""Census worker pool and per-line tasks."""
