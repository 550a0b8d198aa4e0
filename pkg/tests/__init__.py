"""Tests for quiver-grassmannian."""
