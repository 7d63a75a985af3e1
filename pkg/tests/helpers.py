"""Shared random generators for the test suite (seeded by each caller)."""

from diagalg.diagrams import SetPartitionDiagram
from diagalg.halfdiag import HalfDiagram


def random_diagram(rng, n):
    nodes = list(range(1, n + 1)) + [-k for k in range(1, n + 1)]
    blocks = []
    for node in nodes:
        pick = rng.randint(0, len(blocks))
        if pick == len(blocks):
            blocks.append([node])
        else:
            blocks[pick].append(node)
    return SetPartitionDiagram(n, blocks)


def random_half_diagram(rng, n):
    blocks = []
    for dot in range(1, n + 1):
        pick = rng.randint(0, len(blocks))
        if pick == len(blocks):
            blocks.append([dot])
        else:
            blocks[pick].append(dot)
    labels = [i for i in range(len(blocks)) if rng.random() < 0.5]
    return HalfDiagram(n, blocks, labels)
