#include <string>

namespace translit {

// generated by tools/gen_script_table.py; keep in sync with
// data/burmese_script.tsv
const char* kBurmeseScriptTsv = R"TSV(
# Burmese letter and rhyme tables
# kind	key	codepoints-hex
version	1	-
letter	ka	1000
letter	kha	1001
letter	ga	1002
letter	gha	1003
letter	nga	1004
letter	ca	1005
letter	cha	1006
letter	ja	1007
letter	jha	1008
letter	nya	1009
letter	nnya	100A
letter	tta	100B
letter	ttha	100C
letter	dda	100D
letter	ddha	100E
letter	nna	100F
letter	ta	1010
letter	tha	1011
letter	da	1012
letter	dha	1013
letter	na	1014
letter	pa	1015
letter	pha	1016
letter	ba	1017
letter	bha	1018
letter	ma	1019
letter	ya	101A
letter	ra	101B
letter	la	101C
letter	wa	101D
letter	sa	101E
letter	ha	101F
letter	lla	1020
letter	a	1021
medial	ya	103B
medial	ra	103C
medial	wa	103D
medial	ha	103E
sign	tall_aa	102B
sign	aa	102C
sign	i	102D
sign	ii	102E
sign	u	102F
sign	uu	1030
sign	e	1031
sign	ai	1032
sign	anusvara	1036
sign	dot_below	1037
sign	visarga	1038
sign	virama	1039
sign	asat	103A
rhyme	schwa.open.low	-
rhyme	a.open.low	102C
rhyme	a.open.high	102C 1038
rhyme	i.open.creaky	102D
rhyme	i.open.low	102E
rhyme	i.open.high	102E 1038
rhyme	u.open.creaky	102F
rhyme	u.open.low	1030
rhyme	u.open.high	1030 1038
rhyme	e.open.low	1031
rhyme	e.open.high	1031 1038
rhyme	e.open.creaky	1031 1037
rhyme	eh.open.low	101A 103A
rhyme	eh.open.high	1032
rhyme	eh.open.creaky	1032 1037
rhyme	o.open.creaky	102D 102F 1037
rhyme	o.open.low	102D 102F
rhyme	o.open.high	102D 102F 1038
rhyme	aw.open.low	1031 102C 103A
rhyme	aw.open.high	1031 102C
rhyme	aw.open.creaky	1031 102C 1037
rhyme	a.nasal.low	1014 103A
rhyme	a.nasal.high	1014 103A 1038
rhyme	a.nasal.creaky	1014 1037 103A
rhyme	a.nasal.low.ma	1019 103A
rhyme	a.nasal.high.ma	1019 103A 1038
rhyme	a.nasal.creaky.ma	1019 1037 103A
rhyme	a.nasal.low.anusvara	1036
rhyme	a.nasal.high.anusvara	1036 1038
rhyme	a.nasal.creaky.anusvara	1036 1037
rhyme	i.nasal.low	1004 103A
rhyme	i.nasal.high	1004 103A 1038
rhyme	i.nasal.creaky	1004 1037 103A
rhyme	ei.nasal.low	102D 1014 103A
rhyme	ei.nasal.high	102D 1014 103A 1038
rhyme	ei.nasal.creaky	102D 1014 1037 103A
rhyme	ei.nasal.low.ma	102D 1019 103A
rhyme	ei.nasal.high.ma	102D 1019 103A 1038
rhyme	ei.nasal.creaky.ma	102D 1019 1037 103A
rhyme	ou.nasal.low	102F 1014 103A
rhyme	ou.nasal.high	102F 1014 103A 1038
rhyme	ou.nasal.creaky	102F 1014 1037 103A
rhyme	ou.nasal.low.anusvara	102F 1036
rhyme	ou.nasal.high.anusvara	102F 1036 1038
rhyme	ou.nasal.creaky.anusvara	102F 1036 1037
rhyme	ai.nasal.low	102D 102F 1004 103A
rhyme	ai.nasal.high	102D 102F 1004 103A 1038
rhyme	ai.nasal.creaky	102D 102F 1004 1037 103A
rhyme	au.nasal.low	1031 102C 1004 103A
rhyme	au.nasal.high	1031 102C 1004 103A 1038
rhyme	au.nasal.creaky	1031 102C 1004 1037 103A
rhyme	a.glottal.low	1010 103A
rhyme	a.glottal.low.pa	1015 103A
rhyme	eh.glottal.low	1000 103A
rhyme	i.glottal.low	1005 103A
rhyme	ei.glottal.low	102D 1010 103A
rhyme	ei.glottal.low.pa	102D 1015 103A
rhyme	ou.glottal.low	102F 1010 103A
rhyme	ou.glottal.low.pa	102F 1015 103A
rhyme	ai.glottal.low	102D 102F 1000 103A
rhyme	au.glottal.low	1031 102C 1000 103A
tall_after	default	1001 1002 1004 1012 1015 101D
indep	vowels	1023 1024 1025 1026 1027 1029 102A
)TSV";

}  // namespace translit
