"""graph6 and DOT codecs."""
