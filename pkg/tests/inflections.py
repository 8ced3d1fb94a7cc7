# 30 inflected forms of seed verbs, each with its lemma
FORMS = [
    ("says", "say"), ("saying", "say"),
    ("announced", "announce"), ("announces", "announce"), ("announcing", "announce"),
    ("mentioned", "mention"), ("mentions", "mention"), ("mentioning", "mention"),
    ("cooked", "cook"), ("cooks", "cook"), ("cooking", "cook"),
    ("boiled", "boil"), ("boils", "boil"), ("boiling", "boil"),
    ("married", "marry"), ("marries", "marry"), ("marrying", "marry"),
    ("fried", "fry"), ("fries", "fry"),
    ("knitted", "knit"), ("knitting", "knit"),
    ("grows", "grow"), ("growing", "grow"),
    ("complained", "complain"), ("grumbling", "grumble"),
    ("explains", "explain"), ("quoted", "quote"),
    ("visited", "visit"), ("consulting", "consult"), ("builds", "build"),
]
