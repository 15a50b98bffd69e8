"""The two published MacMahonesque expansions, stored exactly as printed.

``GSTAR`` lists (integer coefficient, vectors sharing it); grouped vectors are
the symmetric pairs/triples printed inside one bracket.

``FSTAR`` lists (vector, multiplier, alpha, beta) for printed coefficients of
the shape multiplier * (alpha + beta*w^(n-1) + beta*w^(2n-2)), w = exp(2 pi i/3).
"""
from __future__ import annotations

GSTAR: tuple[tuple[str, tuple[tuple[int, ...], ...]], ...] = (
    ("111800296700031174473803912086849297415061538120147327369024000", ((1,),)),
    ("-166752101806011768239059984406622080125739818487572078291361760", ((3,),)),
    ("62767494936926484419500539507127762695263456351080655000628648", ((5,),)),
    ("-8093327520713830454881403544414940189352187143324915609260800", ((7,),)),
    ("280441876128809798819406207780253229131515792004956171930233", ((9,),)),
    ("-2796626716231217376090778794330046298729981595955539822240", ((11,),)),
    ("-7786923725330582178016165199689395032162976346176403887", ((13,),)),
    ("228492332183970584572974559805984237526583822048824920", ((15,),)),
    ("-1215830626333999290688149213865467730310825113076517", ((17,),)),
    ("2586402206320506298967818494987523980980061899880", ((19,),)),
    ("-1410067106844346141699284499808017619922382477", ((21,),)),
    ("-3994171532397060636616394065429339974329441343990850859754624000", ((1, 1),)),
    ("2882656654596970644128099950941854712719970786862658002184240640", ((1, 3), (3, 1))),
    ("-55606741605506434789774529597134283862175560363960917017922880", ((1, 5), (5, 1))),
    ("-31553740779586632034902588733558781970650743391743394004783040", ((1, 7), (7, 1))),
    ("1236365123530668916047274374112405703022697561233767698983840", ((1, 9), (9, 1))),
    ("-8134808611384895119269896023741057784440125881909492385720", ((1, 11), (11, 1))),
    ("-59580798330731620522824089676425339773368687751394331040", ((1, 13), (13, 1))),
    ("726670078684395930235260971431002859974544415177094000", ((1, 15), (15, 1))),
    ("-2518073299368806196400137760585407383384131378897920", ((1, 17), (17, 1))),
    ("1015449367245264541365106760948433593634244514120", ((1, 19), (19, 1))),
    ("34425095416505212317885657088677311603740090774622195871398400000", ((1, 1, 1),)),
    ("832023026419490860720168658116504249351153130277635758982553600", ((1, 1, 3), (1, 3, 1), (3, 1, 1))),
    ("-543579483064233292326674999312725986268529256505271978016384000", ((1, 1, 5), (1, 5, 1), (5, 1, 1))),
    ("-92019503837778700907398744960854625745491505616944777544192000", ((1, 1, 7), (1, 7, 1), (7, 1, 1))),
    ("4269209011502676546086277141098184955545823619844603765888000", ((1, 1, 9), (1, 9, 1), (9, 1, 1))),
    ("-1229617491336773807894731990558973652669489467404488268800", ((1, 1, 11), (1, 11, 1), (11, 1, 1))),
    ("-229089308125621772523737067819807506681260603464966144000", ((1, 1, 13), (1, 13, 1), (13, 1, 1))),
    ("2160624056705401494233143285716822486526356010777267200", ((1, 1, 15), (1, 15, 1), (15, 1, 1))),
)

FSTAR: tuple[tuple[tuple[int, ...], int, int, int], ...] = (
    ((1,), 4, 199, 21),
    ((3,), 7, 1, -80),
    ((5,), 42, 7, -2),
    ((7,), 23, 1, 0),
    ((1, 3), -1680, 11, -4),
    ((3, 1), -1680, 11, -4),
    ((1, 1), -10752, 1, 0),
    ((1, 5), -3024, 1, 0),
    ((5, 1), -3024, 1, 0),
    ((1, 1, 1), 282240, 1, 0),
    ((1, 1, 3), 120960, 1, 0),
    ((1, 3, 1), 120960, 1, 0),
    ((3, 1, 1), 120960, 1, 0),
    ((1, 1, 1, 1), -161280, 1, 0),
)

# (k, l) and (k, l, r, t) of the forms the two expansions are said to represent
GSTAR_FORM = (1, 3)
FSTAR_FORM = (1, 3, 1, 3)
