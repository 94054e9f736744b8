"""Definitions as states on the hierarchical state grid."""
