"""Built-in benchmark suites: encrypted email, HTTPS, encrypted inference,
and encrypted keyword search, each paired with a plaintext baseline."""
