"""Face-hitting dominating 2-partitions of plane multigraphs."""

__version__ = "0.1.0"
