"""Shared helpers: lattice grids and radius-doubling retries"""
