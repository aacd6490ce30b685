"""Mixed Phi-Eulerian numbers via Peterson Schubert calculus, with exact oracles."""

__version__ = "0.1.0"
