"""CLI commands package.

- reduce, classify, partner: quiddity sequence operations
- growth, rows (alias frieze): frieze entries and growth coefficients
- triangulate, quiver, tube: the correspondences and tube identities
- verify, config: property suites and settings
"""
