"""Writes data/eval/geoparser_gold.jsonl from [[surface|place_id]] markup.

place_id 0 marks a real place missing from the gazetteer.
"""
import json
import pathlib
import re

ROOT = pathlib.Path(__file__).resolve().parents[2]

# (source, marked-up text)
DOCS = [
    ("news", "Gold worth millions was smuggled from [[Mumbai|3001]] to [[Chennai|3004]] last week."),
    ("news", "The smuggling ring operated between [[Maharashtra|2001]] and [[Tamil Nadu|2002]]."),
    ("news", "She flew from [[Sydney|3040]] to [[New York|3026]] and then on to [[London|3034]]."),
    ("news", "Officials in [[Paris|3018]] announced new rail links to [[Lyon|3020]]."),
    ("news", "The rodeo in [[Paris|3019]], [[Texas|2009]] drew visitors from [[Dallas|3023]]."),
    ("news", "From [[Dallas|3023]] we drove two hours north-east to [[Paris|3019]]."),
    ("news", "Fashion week returns to [[Paris|3018]] in September."),
    ("news", "The orchestra toured [[London|3035]], [[Ontario|2024]] and [[Toronto|3080]]."),
    ("news", "Heavy rain flooded parts of [[Hyderabad|3014]] in [[Sindh|2022]] and [[Karachi|3015]]."),
    ("news", "Tech firms keep expanding in [[Hyderabad|3013]] and [[Bengaluru|3009]], [[India|1001]]."),
    ("news", "Carnival crowds filled [[Rio de Janeiro|3084]] and [[Sao Paulo|3083]]."),
    ("news", "Ferries between [[Hong Kong|3048]] and [[Guangzhou|3047]] resumed."),
    ("news", "Trains from [[Pune|3002]] to [[Nagpur|3003]] were fully booked."),
    ("news", "Pilgrims walked from [[Madurai|3006]] to [[Coimbatore|3005]]."),
    ("news", "He moved to [[Nice|3022]] after retiring from his job in [[Marseille|3021]]."),
    ("news", "It was a nice trip and we had a good time reading on the train."),
    ("news", "Mobile phone sales rose sharply in [[Japan|1006]]."),
    ("news", "Commuters in [[NYC|3026]] faced delays on Monday."),
    ("news", "Flights from [[New York City|3026]] to [[Los Angeles|3027]] were full."),
    ("news", "Aid was sent from [[Nairobi|3060]] to [[Lagos|3061]] and [[Johannesburg|3062]]."),
    ("news", "Refugees crossed from [[Afghanistan|1032]] into [[Pakistan|1007]] near [[Kabul|3055]]."),
    ("news", "The ship sailed from [[Lisbon|3074]] to [[Boston|3030]]."),
    ("news", "Exports from [[China|1008]] to [[Germany|1009]] fell in March."),
    ("news", "Tourists from the [[United Kingdom|1003]] flocked to [[Spain|1011]] and [[Italy|1010]]."),
    ("news", "Investors flew into [[Singapore|1041]] from [[Bangkok|3049]] and [[Jakarta|3050]]."),
    ("news", "Truckers hauled goods from [[Munich|3066]] to [[Milan|3070]] via [[Zurich|3076]]."),
    ("news", "The convoy left [[Chennai|3004]] for [[Kochi|3008]] in [[Kerala|2003]]."),
    ("news", "Protesters marched to [[New Delhi|3010]] from [[Gujarat|2007]]."),
    ("news", "Students from [[Kolkata|3011]] moved to [[Bangalore|3009]] for work."),
    ("news", "The storm forced flights out of [[Miami|3031]] and [[Orlando|3032]], [[Florida|2012]]."),
    ("scientific", "Samples were collected in [[Wuhan|3046]], [[Hubei|2029]], and shipped to [[Beijing|3044]]."),
    ("scientific", "Case counts in [[Tokyo|3042]] and [[Osaka|3043]] were compared with [[Seoul|0]]."),
    ("scientific", "Mobility data from [[Madrid|3072]] and [[Barcelona|3073]] showed a sharp drop."),
    ("microblog", "flying to [[london|3034]] tomorrow can't wait"),
    ("microblog", "stuck in [[mumbai|3001]] no flights out"),
    ("microblog", "finally back home in [[chennai|3004]] after 3 days on the road"),
    ("microblog", "anyone driving from [[austin|3025]] to [[houston|3024]] this weekend?"),
    ("microblog", "landed in [[Dubai|3052]]! next stop [[karachi|3015]]"),
    ("microblog", "bus from [[Lahore|3016]] to [[Islamabad|3017]] delayed again"),
    ("microblog", "on my way to [[paris|3018]] for the weekend"),
    ("microblog", "train to [[nyc|3026]] is packed today"),
    ("microblog", "road trip [[dallas|3023]] to [[paris|3019]] [[texas|2009]] with the kids"),
]


def main():
    out = ROOT / "data" / "eval" / "geoparser_gold.jsonl"
    pattern = re.compile(r"\[\[([^|\]]+)\|(\d+)\]\]")
    with out.open("w", encoding="utf-8") as f:
        for source, marked in DOCS:
            text, places, pos = "", [], 0
            for m in pattern.finditer(marked):
                text += marked[pos:m.start()]
                start = len(text.encode("utf-8"))
                text += m.group(1)
                pid = int(m.group(2))
                places.append({"start": start, "end": len(text.encode("utf-8")), "place_id": pid})
                pos = m.end()
            text += marked[pos:]
            f.write(json.dumps({"text": text, "source": source, "places": places}) + "\n")


if __name__ == "__main__":
    main()
