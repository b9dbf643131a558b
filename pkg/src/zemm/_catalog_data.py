"""Edge lists and reference data for the named graphs.

Each edge row is ``label tail head tree`` where ``tree`` is 1 for the
spanning tree edges.  ``array`` holds the tree-edge columns of the
fundamental-cycle matrix (the identity block on the non-tree edges is
implied), ``gram`` a reference Gram matrix and ``form`` the same metric
written as a quadratic form.  E42 has no labels or orientation and only
lists its vertex pairs.
"""

G = {
    "vertices": 10,
    "edges": """
     1  0  1 0
     2  3  0 0
     3  1  6 0
     4  3  8 0
     5  6  7 0
     6  7  8 0
     7  8  5 1
     8  5  9 1
     9  9  7 1
    10  5  6 1
    11  4  9 1
    12  0  4 1
    13  4  2 1
    14  1  2 1
    15  2  3 1
""",
    "array": """
     0  0  0  0  0 -1 -1  1  0
     0  0  0  0  0  1  1  0  1
     0  1  0 -1 -1  0  1 -1  0
     1  1  0  0 -1  0  1  0  1
     0 -1 -1  1  0  0  0  0  0
     1  1  1  0  0  0  0  0  0
""",
    "gram": """
     2  1  1  0  0  0
     1  2  1 -1  0  0
     1  1  2 -1  1  1
     0 -1 -1  2  0 -1
     0  0  1  0  2  1
     0  0  1 -1  1  2
""",
    "form": "x1^2+x1x2+x1x3+x2^2+x2x3-x2x4+x3^2-x3x4+x3x5+x3x6+x4^2-x4x6+x5^2+x5x6+x6^2",
}

F11 = {
    "vertices": 12,
    "edges": """
     1  0  1 0
     2  1  2 0
     3  0  3 0
     4  6  7 0
     5  7  8 0
     6  6 10 0
     7 10  8 0
     8  9  8 1
     9  6  9 1
    10 11 10 1
    11 11  9 1
    12  3 11 1
    13  3  2 1
    14  0  4 1
    15  4  2 1
    16  4  5 1
    17  1  5 1
    18  5  7 1
""",
    "array": """
     0  0  0  0  0  0 -1  0 -1  1  0
     0  0  0  0  0  0  0 -1  1 -1  0
     0  0  0  0  0  1 -1 -1  0  0  0
     0 -1  0  1  1 -1  0  1 -1  0 -1
    -1  0  0 -1 -1  1  0 -1  1  0  1
     0 -1 -1  1  0  0  0  0  0  0  0
    -1  0  1 -1  0  0  0  0  0  0  0
""",
    "gram": """
     2  1 -1  0  0 -1 -1
     1  2  0  1  0 -1  0
    -1  0  2  1  0  0  1
     0  1  1  2  1 -1  0
     0  0  0  1  2 -1 -1
    -1 -1  0 -1 -1  2  1
    -1  0  1  0 -1  1  2
""",
    "form": "x1^2+x1x2-x1x3-x1x6-x1x7+x2^2+x2x4-x2x6+x3^2+x3x4+x3x7+x4^2+x4x5-x4x6+x5^2-x5x6-x5x7+x6^2+x6x7+x7^2",
}

F12 = {
    "vertices": 12,
    "edges": """
     1  7  1 0
     2 11  3 0
     3  9  4 0
     4 10  0 0
     5  2  1 0
     6  5  6 0
     7 11  8 0
     8 11  5 1
     9  5  9 1
    10  9  8 1
    11  8  7 1
    12  7  6 1
    13  6 10 1
    14 10  2 1
    15  2  3 1
    16  3  4 1
    17  4  0 1
    18  0  1 1
""",
    "array": """
     0  0  0  0 -1 -1 -1 -1 -1 -1 -1
    -1 -1 -1 -1 -1 -1 -1 -1  0  0  0
     0  0 -1 -1 -1 -1 -1 -1 -1  0  0
     0  0  0  0  0  0 -1 -1 -1 -1  0
     0  0  0  0  0  0  0 -1 -1 -1 -1
     0 -1 -1 -1 -1  0  0  0  0  0  0
    -1 -1 -1  0  0  0  0  0  0  0  0
""",
    "gram": """
     2  0 -1  0 -1  0  0
     0  2 -1 -1  1  0 -1
    -1 -1  2  0  0 -1  1
     0 -1  0  2 -1  0  0
    -1  1  0 -1  2  0  0
     0  0 -1  0  0  2 -1
     0 -1  1  0  0 -1  2
""",
    "form": "x1^2-x1x3-x1x5+x2^2-x2x3-x2x4+x2x5-x2x7+x3^2-x3x6+x3x7+x4^2-x4x5+x5^2+x6^2-x6x7+x7^2",
}

F13 = {
    "vertices": 12,
    "edges": """
     1  0  1 0
     2  5  4 0
     3  6  4 0
     4  2  7 0
     5  3 10 0
     6 11  7 0
     7 11 10 0
     8 11  0 1
     9  0  5 1
    10  5  9 1
    11  6  1 1
    12  8  6 1
    13  1  2 1
    14  3  4 1
    15  2  3 1
    16  8  7 1
    17  9 10 1
    18  9  8 1
""",
    "array": """
     0 -1 -1 -1 -1  0  0  0  0  0 -1
     0  0 -1 -1 -1 -1 -1 -1  0  0 -1
     0  0  0 -1  0 -1 -1 -1  0  0  0
     0  0  0  1  1  1  0  0 -1  0  0
     0  0  0  1  1  1  0  1  0 -1  1
    -1 -1 -1  0  0  0  0  0 -1  0 -1
    -1 -1 -1  0  0  0  0  0  0 -1  0
""",
    "gram": """
     2  0  0  0  1  0 -1
     0  2 -1  0  1 -1  0
     0 -1  2  0  0  0  0
     0  0  0  2 -1 -1  1
     1  1  0 -1  2  0 -1
     0 -1  0 -1  0  2 -1
    -1  0  0  1 -1 -1  2
""",
    "form": "x1^2+x1x5-x1x7+x2^2-x2x3+x2x5-x2x6+x3^2+x4^2-x4x5-x4x6+x4x7+x5^2-x5x7+x6^2-x6x7+x7^2",
}

F14 = {
    "vertices": 12,
    "edges": """
     1  6  8 0
     2  5 11 0
     3  0  9 0
     4  4  3 0
     5  3 10 0
     6 10  9 0
     7  0  5 0
     8  1  0 1
     9  1  6 1
    10  6  4 1
    11  4  5 1
    12  1  2 1
    13  2  3 1
    14  2  7 1
    15  7 11 1
    16 11 10 1
    17  7  8 1
    18  8  9 1
""",
    "array": """
     0  1  0  0 -1  0 -1  0  0 -1  0
     0  1  1  1 -1  0 -1 -1  0  0  0
     1  0  0  0 -1  0 -1  0  0 -1 -1
     0  1  1  0 -1 -1  0  0  0  0  0
     0  0  0  0  0  1 -1 -1 -1  0  0
     0  0  0  0  0  0  0  1  1 -1 -1
     1 -1 -1 -1  0  0  0  0  0  0  0
""",
    "gram": """
     2 -1 -1  0  0  0  0
    -1  2  0 -1 -1  0  1
    -1  0  2  0  0 -1 -1
     0 -1  0  2  1  0  0
     0 -1  0  1  2  1 -1
     0  0 -1  0  1  2  0
     0  1 -1  0 -1  0  2
""",
    "form": "x1^2-x1x2-x1x3+x2^2-x2x4-x2x5+x2x7+x3^2-x3x6-x3x7+x4^2+x4x5+x5^2+x5x6-x5x7+x6^2+x7^2",
}

G1 = {
    "vertices": 12,
    "edges": """
     1  0  3 0
     2  2  3 0
     3  2  1 0
     4  1  7 0
     5  7  6 0
     6  6  9 0
     7  9  8 0
     8  7  8 1
     9  8 10 1
    10  6 10 1
    11 10  5 1
    12  5  4 1
    13  4  0 1
    14  0  1 1
    15  4  2 1
    16  3 11 1
    17 11  9 1
    18 11  5 1
""",
    "array": """
     0  0  0  0  1  1  0  0  1  0  1
     0  0  0  0  1  0  0  1  1  0  1
     0  0  0  0  0 -1 -1  1  0  0  0
     1  1  0  1  1  1  1  0  0  0  0
    -1 -1  1  0  0  0  0  0  0  0  0
     0  0 -1 -1  0  0  0  0  0 -1  1
     0  1  0  1  0  0  0  0  0  1 -1
""",
    "gram": """
     2 -1  1  0  1  1  1
    -1  2 -1 -1 -1 -1  0
     1 -1  2  1  1  1  0
     0 -1  1  2  1  0 -1
     1 -1  1  1  2  1  0
     1 -1  1  0  1  2  1
     1  0  0 -1  0  1  2
""",
    "form": "x1^2-x1x2+x1x3+x1x5+x1x6+x1x7+x2^2-x2x3-x2x4-x2x5-x2x6+x3^2+x3x4+x3x5+x3x6+x4^2+x4x5-x4x7+x5^2+x5x6+x6^2+x6x7+x7^2",
}

G2 = {
    "vertices": 12,
    "edges": """
     1  0 11 0
     2 11  1 0
     3  0  3 0
     4  3  9 0
     5  9  8 0
     6  7  8 0
     7  1  7 0
     8  0  5 1
     9 11  5 1
    10  5  4 1
    11  4  2 1
    12  4 10 1
    13  1  2 1
    14  3  2 1
    15  6  9 1
    16  6  7 1
    17  6 10 1
    18 10  8 1
""",
    "array": """
    -1  1  0  0  0  0  0  0  0  0  0
     0 -1 -1 -1  0  1  0  0  0  0  0
    -1  0 -1 -1  0  0  1  0  0  0  0
     0  0  0  1 -1  0 -1 -1  0  1  0
     0  0  0  0  0  0  0  1  0 -1 -1
     0  0  0  0  0  0  0  0  1 -1 -1
     0  0  0  1 -1 -1  0  0 -1  1  0
""",
    "gram": """
     2  1 -1  0  0  0  0
     1  2 -1 -1  0  0  1
    -1 -1  2  1  0  0  0
     0 -1  1  2  1 -1 -1
     0  0  0  1  2 -1  0
     0  0  0 -1 -1  2  1
     0  1  0 -1  0  1  2
""",
    "form": "x1^2+x1x2-x1x3+x2^2-x2x3-x2x4+x2x7+x3^2+x3x4+x4^2+x4x5-x4x6-x4x7+x5^2-x5x6+x6^2+x6x7+x7^2",
}

G3 = {
    "vertices": 12,
    "edges": """
     1  0  5 0
     2  0  3 0
     3  5  1 0
     4  3  9 0
     5  1  7 0
     6  7  8 0
     7  9  8 0
     8  5 11 1
     9  1 11 1
    10 11  2 1
    11  0  4 1
    12  4  2 1
    13  4 10 1
    14  3  2 1
    15  6  7 1
    16  6 10 1
    17 10  8 1
    18  6  9 1
""",
    "array": """
     1  0  1 -1 -1  0  0  0  0  0  0
     0  0  0 -1 -1  0  1  0  0  0  0
    -1  1  0  0  0  0  0  0  0  0  0
     0  0  0  0  1 -1 -1  0  1  0 -1
     0 -1 -1  0  1 -1  0 -1  1  0  0
     0  0  0  0  0  0  0  1 -1 -1  0
     0  0  0  0  0  0  0  0 -1 -1  1
""",
    "gram": """
     2 -1  1 -1  1  0  0
    -1  2  0  1  0  0  0
     1  0  2  0  1  0  0
    -1  1  0  2 -1 -1  1
     1  0  1 -1  2  1  0
     0  0  0 -1  1  2 -1
     0  0  0  1  0 -1  2
""",
    "form": "x1^2-x1x2+x1x3-x1x4+x1x5+x2^2+x2x4+x3^2+x3x5+x4^2-x4x5-x4x6+x4x7+x5^2+x5x6+x6^2-x6x7+x7^2",
}

G4 = {
    "vertices": 12,
    "edges": """
     1  0  1 0
     2  4 11 0
     3 11  2 0
     4  4 10 0
     5  7  1 0
     6  7  8 0
     7 10  8 0
     8  1  2 1
     9  2  3 1
    10  3  5 1
    11  5  0 1
    12 11  5 1
    13  0  4 1
    14 10  6 1
    15  9  6 1
    16  3  9 1
    17  6  7 1
    18  8  9 1
""",
    "array": """
     1  1  1  1  0  0  0  0  0  0  0
     0  0  0  1  1  1  0  0  0  0  0
     0  1  1  0 -1  0  0  0  0  0  0
     0  0  1  1  0  1  1 -1 -1  0  0
     1  1  0  0  0  0  0  1  1  1  0
     0  0  0  0  0  0  0  1  0  1  1
     0  0  0  0  0  0 -1  1  0  0  1
""",
    "gram": """
     2  0  0 -1 -1  0 -1
     0  2  1 -1 -1  0  0
     0  1  2 -1 -1  0  0
    -1 -1 -1  2  1  0  1
    -1 -1 -1  1  2 -1  1
     0  0  0  0 -1  2 -1
    -1  0  0  1  1 -1  2
""",
    "form": "x1^2-x1x4-x1x5-x1x7+x2^2+x2x3-x2x4-x2x5+x3^2-x3x4-x3x5+x4^2+x4x5+x4x7+x5^2-x5x6+x5x7+x6^2-x6x7+x7^2",
}

G5 = {
    "vertices": 12,
    "edges": """
     1  1  7 0
     2  1  2 0
     3  4 10 0
     4  6  7 0
     5  4  2 0
     6  6 10 0
     7 11  5 0
     8  7  8 1
     9  8  9 1
    10  9  3 1
    11  3  0 1
    12  0  1 1
    13  2  5 1
    14  5  3 1
    15 10  8 1
    16  0  4 1
    17  9 11 1
    18 11  6 1
""",
    "array": """
     1  1  1  1  1  0  0  0  0  0  0
     0  0  0  1  1  1  1  0  0  0  0
     0  1  1  1  0  0  0  1  1  0  0
     1  1  0  0  0  0  0  0  0  1  1
     0  0  0  1  0  1  1  0  1  0  0
     0  1  0  0  0  0  0  1  0  1  1
     0  0 -1  0  0  0  1  0  0  1  0
""",
    "gram": """
     2 -1  0 -1  0  0  1
    -1  2  0  0 -1  0  0
     0  0  2  0 -1 -1  1
    -1  0  0  2  0 -1  0
     0 -1 -1  0  2  1 -1
     0  0 -1 -1  1  2 -1
     1  0  1  0 -1 -1  2
""",
    "form": "x1^2-x1x2-x1x4+x1x7+x2^2-x2x5+x3^2-x3x5-x3x6+x3x7+x4^2-x4x6+x5^2+x5x6-x5x7+x6^2-x6x7+x7^2",
}

G6 = {
    "vertices": 12,
    "edges": """
     1  1  7 0
     2  5 11 0
     3  3  9 0
     4  2  1 0
     5  3  5 0
     6  7 11 0
     7  6  9 0
     8  4 10 1
     9  1  0 1
    10  0  3 1
    11  5  2 1
    12  0  4 1
    13  4  2 1
    14  8  7 1
    15 11  6 1
    16  9  8 1
    17  6 10 1
    18 10  8 1
""",
    "array": """
    -1 -1  0  0 -1  0 -1  0  0  0 -1
    -1  0  0 -1  0  1  0  1  0  1  0
    -1  0  1  0 -1  0  0  0  1  0 -1
     0  1  0  0  1  1  0  0  0  0  0
     0  0  1  1 -1 -1  0  0  0  0  0
     0  0  0  0  0  0  1  1  0  1  1
     0  0  0  0  0  0  0  0  1 -1 -1
""",
    "gram": """
     2 -1 -1  1  0  1  0
    -1  2  0 -1  1 -1  0
    -1  0  2  0 -1 -1 -1
     1 -1  0  2  0  0 -1
     0  1 -1  0  2  0  0
     1 -1 -1  0  0  2  1
     0  0 -1 -1  0  1  2
""",
    "form": "x1^2-x1x2-x1x3+x1x4+x1x6+x2^2-x2x4+x2x5-x2x6+x3^2-x3x5-x3x6-x3x7+x4^2-x4x7+x5^2+x6^2+x6x7+x7^2",
}

G7 = {
    "vertices": 12,
    "edges": """
     1  1  7 0
     2  3 11 0
     3  5 11 0
     4  1  0 0
     5  5  3 0
     6  7  6 0
     7  6  9 0
     8  4 10 1
     9 11  9 1
    10  0  4 1
    11  0  5 1
    12  4  2 1
    13  3  2 1
    14  6 10 1
    15 10  8 1
    16  9  8 1
    17  8  7 1
    18  2  1 1
""",
    "array": """
    -1  0  0  0  1  0  0 -1  0 -1  1
    -1  1  0  0  1 -1  0 -1  1  0  0
    -1  1 -1  1  0  0  0 -1  1  0  0
     0  0  1  0  1  0  0  0  0  0  1
     0  0 -1  1 -1  1  0  0  0  0  0
     0  0  0  0  0  0  1  1  0  1  0
     0  0  0  0  0  0 -1 -1  1  0  0
""",
    "gram": """
     2 -1  0 -1 -1  1  0
    -1  2 -1  0  1 -1 -1
     0 -1  2  0 -1  0  0
    -1  0  0  2  1 -1  0
    -1  1 -1  1  2 -1  0
     1 -1  0 -1 -1  2  1
     0 -1  0  0  0  1  2
""",
    "form": "x1^2-x1x2-x1x4-x1x5+x1x6+x2^2-x2x3+x2x5-x2x6-x2x7+x3^2-x3x5+x4^2+x4x5-x4x6+x5^2-x5x6+x6^2+x6x7+x7^2",
}

G8 = {
    "vertices": 12,
    "edges": """
     1  0  3 0
     2  0  4 0
     3  3 11 0
     4 11  9 0
     5  4 10 0
     6 10  8 0
     7  9  8 0
     8  0  5 1
     9  5 11 1
    10  5  1 1
    11  1  7 1
    12  4  2 1
    13  1  2 1
    14  3  2 1
    15  6  9 1
    16  6 10 1
    17  6  7 1
    18  7  8 1
""",
    "array": """
    -1  0 -1  0  0 -1  1  0  0  0  0
    -1  0 -1  0  1 -1  0  0  0  0  0
     0 -1  1  0  0  1 -1  0  0  0  0
     0  1 -1 -1  0  0  0 -1  0  1  0
     0  0  0 -1 -1  1  0  0 -1  1  0
     0  0  0  0  0  0  0  0  1 -1 -1
     0  0  0  0  0  0  0  1  0 -1 -1
""",
    "gram": """
     2 -1  1  0  0  0  0
    -1  2  0  0  1  0  0
     1  0  2  1  0  0  0
     0  0  1  2 -1 -1  1
     0  1  0 -1  2  1  0
     0  0  0 -1  1  2 -1
     0  0  0  1  0 -1  2
""",
    "form": "x1^2-x1x2+x1x3+x2^2+x2x5+x3^2+x3x4+x4^2-x4x5-x4x6+x4x7+x5^2+x5x6+x6^2-x6x7+x7^2",
}

G9 = {
    "vertices": 12,
    "edges": """
     1  3  0 0
     2  0  1 0
     3  5 11 0
     4  4 10 0
     5  3  9 0
     6  9  6 0
     7  6  7 0
     8  0  4 1
     9  4  2 1
    10  2  3 1
    11  1  2 1
    12  1  5 1
    13  5 11 1
    14 11  7 1
    15  7  8 1
    16 10  8 1
    17  6 10 1
    18  8  9 1
""",
    "array": """
     1  1  1  0  0  0  0  0  0  0  0
    -1 -1  0  1  0  0  0  0  0  0  0
     0  0  0  0  0 -1  0  0  0  0  0
     0 -1  0  1 -1 -1 -1 -1  1  0  0
     0  0  1  1 -1 -1 -1 -1  0  0 -1
     0  0  0  0  0  0  0  0  1  1  1
     0  0  0  0  0  0  0  1 -1 -1  0
""",
    "gram": """
     2  1  0  1 -1  0  0
     1  2  1  0 -1  0  0
     0  1  2 -1  0  1  0
     1  0 -1  2 -1 -1  0
    -1 -1  0 -1  2  1  1
     0  0  1 -1  1  2  1
     0  0  0  0  1  1  2
""",
    "form": "x1^2+x1x2+x1x4-x1x5+x2^2+x2x3-x2x5+x3^2-x3x4+x3x6+x4^2-x4x5-x4x6+x5^2+x5x6+x5x7+x6^2+x6x7+x7^2",
}

G10 = {
    "vertices": 12,
    "edges": """
     1  3  0 0
     2  0  4 0
     3  5 11 0
     4  4 10 0
     5  3  9 0
     6  9  6 0
     7  6 10 0
     8 10  8 1
     9  8  9 1
    10  6  7 1
    11  7  8 1
    12  1  7 1
    13  0  5 1
    14  5 11 1
    15 11  1 1
    16  1  2 1
    17  2  3 1
    18  4  2 1
""",
    "array": """
     0  0  0  0  0  1  1  1  1  1  0
     0  0  0  0  0 -1 -1 -1 -1  0  1
     0  0  0  0  0  0 -1  0  0  0  0
     1  0  0 -1 -1  0  0  0  1  0 -1
     0 -1  0 -1 -1  0  0  0  1  1  0
     0  1  1  1  0  0  0  0  0  0  0
     1  0 -1 -1  0  0  0  0  0  0  0
""",
    "gram": """
     2  1  1  1 -1  0  0
     1  2  0  1  0  0  0
     1  0  2  0  0  0  0
     1  1  0  2 -1  0 -1
    -1  0  0 -1  2  1  1
     0  0  0  0  1  2  1
     0  0  0 -1  1  1  2
""",
    "form": "x1^2+x1x2+x1x3+x1x4-x1x5+x2^2+x2x4+x3^2+x4^2-x4x5-x4x7+x5^2+x5x6+x5x7+x6^2+x6x7+x7^2",
}

E42 = {
    "vertices": 12,
    "pairs": """
     0  1
     1  2
     2  3
     3  0
     6  7
     7  8
     8  9
     9  6
     0  4
     4  2
     6 10
    10  8
     1  5
     4  5
     3  5
     7 11
    10 11
     9 11
""",
}
