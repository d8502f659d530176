"""Command implementations for poisson2"""
