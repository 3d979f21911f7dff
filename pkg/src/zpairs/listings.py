"""Published combinatorics of the catalog families, as label sets."""
from __future__ import annotations


def _parse(text):
    return sorted(tuple(sorted(block.split(), key=_key)) for block in text.strip().split(";"))


def _key(label):
    return (label[0] != "V", int(label[1:]))


C = _parse("""
V1 S1 S10; V1 S2 S4; V1 S3 S6; V1 S5 S7; V1 S8 S9;
V2 S1 S7; V2 S2 S3; V2 S4 S9; V2 S5 S6; V2 S8 S10;
V3 S1 S2; V3 S3 S5; V3 S4 S8; V3 S6 S7; V3 S9 S10
""")

C1 = _parse("""
V1 S1 S3 S6 S10; V1 S2 S4; V1 S5 S7; V1 S8 S9;
V2 S1 S7; V2 S2 S3; V2 S4 S9; V2 S5 S6; V2 S8 S10;
V3 S1 S2; V3 S3 S5; V3 S4 S8; V3 S6 S7; V3 S9 S10
""")

C2 = _parse("""
V1 S1 S3 S6 S10; V1 S2 S4; V1 S5 S7; V1 S8 S9;
V2 S1 S4 S7 S9; V2 S2 S3; V2 S5 S6; V2 S8 S10;
V3 S1 S2; V3 S3 S5; V3 S4 S8; V3 S6 S7; V3 S9 S10
""")

D = _parse("""
V1 S1 S4; V1 S2 S3; V1 S5 S7; V1 S6 S10; V1 S8 S9; V1 S11 S12;
V2 S1 S2; V2 S3 S6; V2 S4 S12; V2 S5 S8; V2 S7 S9; V2 S10 S11;
V3 S1 S3; V3 S2 S5; V3 S4 S9; V3 S6 S11; V3 S7 S8; V3 S10 S12
""")

E = _parse("""
V1 S1 S5; V1 S2 S14; V1 S3 S6; V1 S4 S9; V1 S7 S8; V1 S10 S11; V1 S12 S13;
V2 S1 S4; V2 S2 S11; V2 S3 S7; V2 S5 S13; V2 S6 S8; V2 S9 S10; V2 S12 S14;
V3 S1 S8; V3 S2 S3; V3 S4 S10; V3 S5 S12; V3 S6 S7; V3 S9 S11; V3 S13 S14
""")

QUADRILATERAL = _parse("V1 S1 S4; V1 S2 S3; V2 S1 S3; V2 S2 S4; V3 S1 S2; V3 S3 S4")

PRINTED = {"C": C, "C1": C1, "C2": C2, "D": D, "E": E}

# Alignments created by each degeneration, read from the coordinate tables.
CREATED = {
    "D1": [("V2", "S4", "S5", "S8", "S12")],
    "D2": [("V2", "S4", "S5", "S8", "S12"), ("V3", "S4", "S6", "S9", "S11")],
    "E1": [("V2", "S3", "S5", "S7", "S13")],
    "E2": [("V2", "S3", "S5", "S7", "S13"), ("V3", "S4", "S10", "S13", "S14")],
    "E3": [("V1", "S1", "S3", "S5", "S6"), ("V1", "S2", "S4", "S9", "S14")],
}

# sigma_1 and sigma_2 acting on (V1, V2, V3, S1, ..., S10).
SIGMA1 = "V2 V1 V3 S2 S1 S10 S7 S9 S8 S4 S6 S5 S3".split()
SIGMA2 = "V2 V1 V3 S1 S2 S4 S3 S8 S9 S10 S5 S6 S7".split()
