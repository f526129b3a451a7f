"""Bundled corpus manifests."""
