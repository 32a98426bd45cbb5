"""Published sequences, typed in by hand with their bars as printed."""

VERONESE = {
    (2, 2): "1, 2, 3, 4",
    (2, 3): "1, 2, 3, 4, 5, 6, 7 | 9",
    (2, 4): "1, 2, 3, 4, 5, 6, 7, 8, 9, 10 | 12, 13 | 16",
    (2, 5): "1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13 | 15, 16, 17 | 20, 21 | 25",
    (2, 6): "1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16 | 18, 19, 20, 21 | 24, 25, 26 | 30, 31 | 36",
    (2, 7): "1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19 | 21, 22, 23, 24, 25"
            " | 28, 29, 30, 31 | 35, 36, 37 | 42, 43 | 49",
    (3, 2): "1, 2, 3, 4, 5, 6 | 8",
    # printed without a bar between 7 and 9
    (3, 3): "1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13 | 15 | 18, 19 | 21 | 27",
    (3, 4): "1, 2, 3, 4, 5, 6, 7, 8, 9, 10 | 12, 13 | 16, 17, 18, 19, 20, 21, 22 | 24, 25 | 28"
            " | 32, 33, 34 | 36, 37 | 40 | 48, 49 | 52 | 64",
    (4, 2): "1, 2, 3, 4, 5, 6 | 8, 9, 10 | 12 | 16",
    (4, 3): "1, 2, 3, 4, 5, 6, 7 | 9, 10, 11, 12, 13 | 15 | 18, 19 | 21 | 27, 28, 29, 30, 31 | 33"
            " | 36, 37 | 39 | 45 | 54, 55 | 57 | 63 | 81",
    (5, 2): "1, 2, 3, 4, 5, 6 | 8, 9, 10 | 12 | 16, 17, 18 | 20 | 24 | 32",
    (5, 3): "1, 2, 3, 4, 5, 6, 7 | 9, 10, 11, 12, 13 | 15 | 18, 19 | 21 | 27, 28, 29, 30, 31 | 33"
            " | 36, 37 | 39 | 45 | 54, 55 | 57 | 63 | 81, 82, 83, 84, 85 | 87 | 90, 91 | 93 | 99"
            " | 108, 109 | 111 | 117 | 135 | 162, 163 | 165 | 171 | 189 | 243",
}

SEGRE = {
    (2, 2): "1, 2, 3, 4 | 6",
    (3, 3): "1, 2, 3, 4 | 6, 7 | 10, 11 | 14 | 20",
    # printed without a bar between 4 and 6
    (4, 4): "1, 2, 3, 4, 6, 7 | 10, 11 | 14 | 20, 21 | 25 | 35, 36 | 40 | 50 | 70",
    (3, 2): "1, 2, 3, 4 | 6, 7 | 10",
    (4, 3): "1, 2, 3, 4 | 6, 7 | 10, 11 | 14 | 20, 21 | 25 | 35",
    (4, 2): "1, 2, 3, 4 | 6, 7 | 10, 11 | 15",
    (5, 3): "1, 2, 3, 4 | 6, 7 | 10, 11 | 14 | 20, 21 | 25 | 35, 36 | 41 | 56",
    (5, 2): "1, 2, 3, 4 | 6, 7 | 10, 11 | 15, 16 | 21",
}

# term indices (0-based) where a gap of size >= 2 is printed without a bar
MISSING_BARS = {("veronese", (3, 3)): {7}, ("segre", (4, 4)): {4}}

POSET_GREEDY = (9, 8, 6, 3, 2, 1)
POSET_LEXMAX = (9, 6, 5, 4, 3, 1)
POSET_GREEDY_ORDER = ["c", "b", "a^3", "a^2", "a"]
POSET_OTHER_ORDER = ["a^3", "a^2", "a", "c", "b"]

POINTSET_SECANT = (1, 3, 5, 8)
POINTSET_CHAIN = (1, 2, 5, 8)
