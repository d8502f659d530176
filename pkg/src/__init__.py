"""poisson2 - Poisson cohomology of planar quasihomogeneous germs"""
__version__ = "1.0.0"
