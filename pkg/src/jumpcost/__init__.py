"""Jump costs of words for nondeterministic automata."""
