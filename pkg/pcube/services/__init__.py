"""Services: one per area of partial-cube structure, plus the census."""
