"""Unit test package for hopflab."""
