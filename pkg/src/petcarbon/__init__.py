"""petcarbon: energy and carbon benchmarking of cryptographic
privacy-enhancing technologies against their plaintext equivalents."""

__version__ = "0.1.0"
