"""Non-oriented cyclic quivers."""

from src.quiver.cycle import canonicalize, enumerate_cycles, mu, sigma, sigma_tilde
from src.quiver.dot import to_dot

__all__ = ["canonicalize", "enumerate_cycles", "mu", "sigma", "sigma_tilde", "to_dot"]
