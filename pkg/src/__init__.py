"""Exact F_p kernel for Cartier modules, test modules and V-filtrations."""
