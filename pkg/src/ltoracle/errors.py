class DomainError(ValueError):
    """A request outside an operation's documented domain (bad m, empty range,
    zero marked states, malformed circuit file). The CLI maps this to exit 3."""
