"""Wandercode: call-graph based code navigation recommender."""

__version__ = "0.1.0"
