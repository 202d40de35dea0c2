#!/usr/bin/env python3
"""Regenerates data/burmese_script.tsv and src/script_data.cpp.

Keeps the shipped letter/rhyme table and the compiled-in copy in sync.
Run from the repository root after editing the tables below.
"""

import os

LETTERS = [
    ("ka", 0x1000), ("kha", 0x1001), ("ga", 0x1002), ("gha", 0x1003), ("nga", 0x1004),
    ("ca", 0x1005), ("cha", 0x1006), ("ja", 0x1007), ("jha", 0x1008), ("nya", 0x1009),
    ("nnya", 0x100A), ("tta", 0x100B), ("ttha", 0x100C), ("dda", 0x100D), ("ddha", 0x100E),
    ("nna", 0x100F), ("ta", 0x1010), ("tha", 0x1011), ("da", 0x1012), ("dha", 0x1013),
    ("na", 0x1014), ("pa", 0x1015), ("pha", 0x1016), ("ba", 0x1017), ("bha", 0x1018),
    ("ma", 0x1019), ("ya", 0x101A), ("ra", 0x101B), ("la", 0x101C), ("wa", 0x101D),
    ("sa", 0x101E), ("ha", 0x101F), ("lla", 0x1020), ("a", 0x1021),
]

MEDIALS = [("ya", 0x103B), ("ra", 0x103C), ("wa", 0x103D), ("ha", 0x103E)]

SIGNS = [
    ("tall_aa", 0x102B), ("aa", 0x102C), ("i", 0x102D), ("ii", 0x102E), ("u", 0x102F),
    ("uu", 0x1030), ("e", 0x1031), ("ai", 0x1032), ("anusvara", 0x1036),
    ("dot_below", 0x1037), ("visarga", 0x1038), ("virama", 0x1039), ("asat", 0x103A),
]

AA, I, II, U, UU, E, AI = 0x102C, 0x102D, 0x102E, 0x102F, 0x1030, 0x1031, 0x1032
ANU, DOT, VIS, ASAT = 0x1036, 0x1037, 0x1038, 0x103A
KA, CA, NGA, TA, NA, PA, MA, YA = 0x1000, 0x1005, 0x1004, 0x1010, 0x1014, 0x1015, 0x1019, 0x101A

# (key, codepoints). Glottal rhymes are stored under tone "low"; creaky
# nasal marks are stored dot-before-asat (the NFC order).
RHYMES = [
    ("schwa.open.low", []),
    ("a.open.low", [AA]),
    ("a.open.high", [AA, VIS]),
    ("i.open.creaky", [I]),
    ("i.open.low", [II]),
    ("i.open.high", [II, VIS]),
    ("u.open.creaky", [U]),
    ("u.open.low", [UU]),
    ("u.open.high", [UU, VIS]),
    ("e.open.low", [E]),
    ("e.open.high", [E, VIS]),
    ("e.open.creaky", [E, DOT]),
    ("eh.open.low", [YA, ASAT]),
    ("eh.open.high", [AI]),
    ("eh.open.creaky", [AI, DOT]),
    ("o.open.creaky", [I, U, DOT]),
    ("o.open.low", [I, U]),
    ("o.open.high", [I, U, VIS]),
    ("aw.open.low", [E, AA, ASAT]),
    ("aw.open.high", [E, AA]),
    ("aw.open.creaky", [E, AA, DOT]),
    # nasalized
    ("a.nasal.low", [NA, ASAT]),
    ("a.nasal.high", [NA, ASAT, VIS]),
    ("a.nasal.creaky", [NA, DOT, ASAT]),
    ("a.nasal.low.ma", [MA, ASAT]),
    ("a.nasal.high.ma", [MA, ASAT, VIS]),
    ("a.nasal.creaky.ma", [MA, DOT, ASAT]),
    ("a.nasal.low.anusvara", [ANU]),
    ("a.nasal.high.anusvara", [ANU, VIS]),
    ("a.nasal.creaky.anusvara", [ANU, DOT]),
    ("i.nasal.low", [NGA, ASAT]),
    ("i.nasal.high", [NGA, ASAT, VIS]),
    ("i.nasal.creaky", [NGA, DOT, ASAT]),
    ("ei.nasal.low", [I, NA, ASAT]),
    ("ei.nasal.high", [I, NA, ASAT, VIS]),
    ("ei.nasal.creaky", [I, NA, DOT, ASAT]),
    ("ei.nasal.low.ma", [I, MA, ASAT]),
    ("ei.nasal.high.ma", [I, MA, ASAT, VIS]),
    ("ei.nasal.creaky.ma", [I, MA, DOT, ASAT]),
    ("ou.nasal.low", [U, NA, ASAT]),
    ("ou.nasal.high", [U, NA, ASAT, VIS]),
    ("ou.nasal.creaky", [U, NA, DOT, ASAT]),
    ("ou.nasal.low.anusvara", [U, ANU]),
    ("ou.nasal.high.anusvara", [U, ANU, VIS]),
    ("ou.nasal.creaky.anusvara", [U, ANU, DOT]),
    ("ai.nasal.low", [I, U, NGA, ASAT]),
    ("ai.nasal.high", [I, U, NGA, ASAT, VIS]),
    ("ai.nasal.creaky", [I, U, NGA, DOT, ASAT]),
    ("au.nasal.low", [E, AA, NGA, ASAT]),
    ("au.nasal.high", [E, AA, NGA, ASAT, VIS]),
    ("au.nasal.creaky", [E, AA, NGA, DOT, ASAT]),
    # glottal (checked); no tone marks
    ("a.glottal.low", [TA, ASAT]),
    ("a.glottal.low.pa", [PA, ASAT]),
    ("eh.glottal.low", [KA, ASAT]),
    ("i.glottal.low", [CA, ASAT]),
    ("ei.glottal.low", [I, TA, ASAT]),
    ("ei.glottal.low.pa", [I, PA, ASAT]),
    ("ou.glottal.low", [U, TA, ASAT]),
    ("ou.glottal.low.pa", [U, PA, ASAT]),
    ("ai.glottal.low", [I, U, KA, ASAT]),
    ("au.glottal.low", [E, AA, KA, ASAT]),
]

# letters whose bare shape takes the tall aa sign
TALL_AFTER = [0x1001, 0x1002, 0x1004, 0x1012, 0x1015, 0x101D]

INDEPENDENT_VOWELS = [0x1023, 0x1024, 0x1025, 0x1026, 0x1027, 0x1029, 0x102A]


def hexes(cps):
    return " ".join("%04X" % c for c in cps) if cps else "-"


def build():
    lines = ["# Burmese letter and rhyme tables", "# kind\tkey\tcodepoints-hex"]
    lines.append("version\t1\t-")
    for name, cp in LETTERS:
        lines.append("letter\t%s\t%04X" % (name, cp))
    for name, cp in MEDIALS:
        lines.append("medial\t%s\t%04X" % (name, cp))
    for name, cp in SIGNS:
        lines.append("sign\t%s\t%04X" % (name, cp))
    for key, cps in RHYMES:
        lines.append("rhyme\t%s\t%s" % (key, hexes(cps)))
    lines.append("tall_after\tdefault\t%s" % hexes(TALL_AFTER))
    lines.append("indep\tvowels\t%s" % hexes(INDEPENDENT_VOWELS))
    return "\n".join(lines) + "\n"


def main():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    tsv = build()
    with open(os.path.join(root, "data", "burmese_script.tsv"), "w", encoding="utf-8") as f:
        f.write(tsv)
    cpp = (
        "#include <string>\n\n"
        "namespace translit {\n\n"
        "// generated by tools/gen_script_table.py; keep in sync with\n"
        "// data/burmese_script.tsv\n"
        'const char* kBurmeseScriptTsv = R"TSV(\n%s)TSV";\n\n'
        "}  // namespace translit\n" % tsv
    )
    with open(os.path.join(root, "src", "script_data.cpp"), "w", encoding="utf-8") as f:
        f.write(cpp)
    print("wrote data/burmese_script.tsv and src/script_data.cpp")


if __name__ == "__main__":
    main()
