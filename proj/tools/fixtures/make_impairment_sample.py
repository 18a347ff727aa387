"""Writes data/eval/impairment_sample.jsonl.

A 100-statement labeled sample built so the baseline rules give
TP 23, FP 27, FN 8, TN 42. Prefix false positives and cancel-family
misses are both represented, so rule changes can be compared on it.
"""
import json
import pathlib
import random

ROOT = pathlib.Path(__file__).resolve().parents[2]

# Impaired statements the baseline catches (negation words).
NEGATED = [
    "The ferry did not sail to Chennai because of the cyclone.",
    "Trains from Mumbai to Pune are not running this week.",
    "Pilgrims could not travel to Madurai during the lockdown.",
    "No flights left Delhi for London on Sunday.",
    "The cargo ship never reached the port of Karachi.",
    "Tourists can't enter Nepal until the border reopens.",
    "Residents were told not to drive to Bangalore.",
    "Nobody was allowed to fly out of Wuhan in January.",
    "The trucks didn't cross into Pakistan at the border.",
    "Students cannot return to Sydney before March.",
    "The convoy went nowhere after the bridge collapsed.",
    "Migrant workers walked home without any transport.",
    "None of the buses reached Chennai on time.",
    "Nothing moved in or out of the harbour at Kochi.",
    "We won't be flying to Tokyo this summer.",
    "The airline does not fly to Lagos anymore.",
    "Shipments of gold were not sent to Dubai last month.",
    "Refugees could not leave Kabul by road.",
    "Passengers were stuck at the airport with no flights out.",
    "The team never made it to Paris for the final.",
    "Fishermen did not go out to sea from Chennai.",
    "I haven't travelled to Hong Kong since the protests.",
    "The family could not move to Toronto after the visa was refused.",
]

# Impaired statements without negation words.
UNNEGATED = [
    "All flights from Mumbai to Chennai were cancelled on Monday.",
    "The airline cancels its Sydney route from June.",
    "The marathon trip to Boston was postponed until autumn.",
    "Officials postponed the evacuation of Houston residents.",
    "Heavy snow prevented the trucks from reaching Munich.",
    "Travellers avoided the road through Kabul after the attacks.",
    "Hundreds of passengers were stranded at the airport in Bangkok.",
    "The ship was stuck in the canal near Cairo for a week.",
]

# Normal statements the baseline flags through a prefix rule.
PREFIX_NORMAL = [
    "The trucks delivered gold bars to Chennai on Tuesday.",
    "The ferry departed from Mumbai at dawn.",
    "Police discovered a route used to move gold from Mumbai to Chennai.",
    "The aircraft descended toward London.",
    "Passengers disembarked in Singapore after the long voyage.",
    "The company dispatched two trucks to Pune.",
    "Smugglers disguised the gold and drove it to Chennai.",
    "The army deployed troops to the border near Lahore.",
    "Volunteers distributed food as the convoy moved to Kochi.",
    "The courier misdirected the parcel through Dubai to Lagos.",
    "Migrants were displaced and moved to camps near Dhaka.",
    "The cargo was declared at customs and shipped to Hamburg.",
    "The ship docked at Lisbon and then departed for Boston.",
    "He deposited the gold in Dubai before flying to Mumbai.",
    "The crew decided to sail from Athens to Venice.",
    "Seats are available on trains from Chennai to Madurai.",
    "Tourists were able to fly from London to Paris again.",
    "Pilgrims travelled to the distant shrine near Kathmandu.",
    "Aware of the storm, sailors steered the boat to Colombo.",
    "Alternative routes carried traffic from Pune to Mumbai.",
]

# Normal statements the baseline flags through a negation or -less word.
NEGATION_NORMAL = [
    "No one stopped the convoy from reaching Delhi.",
    "The trains run on time and never stop at Nagpur.",
    "Not only tourists but also traders travel to Kochi.",
    "Nothing could stop the pilgrims from walking to Madurai.",
    "The airline flies to Tokyo without a stopover.",
    "There is no better way to travel from Paris to Lyon than by train.",
    "Tireless volunteers drove supplies to Houston.",
]

PLAIN_NORMAL = [
    "The ship sailed from Lisbon to Boston.",
    "Thousands of tourists flew from London to New York for the holidays.",
    "Gold was smuggled from Mumbai to Chennai by road.",
    "The train travels from Chennai to Coimbatore every morning.",
    "Migrants walked from Karachi to Hyderabad in search of work.",
    "We drove from Dallas to Houston on Friday.",
    "The delegation flew to Beijing for the summit.",
    "Cargo ships carry oil from Dubai to Mumbai.",
    "Pilgrims travel to Madurai each year for the festival.",
    "Students moved from Pune to Bangalore for college.",
    "The president will visit Tokyo next week.",
    "Thousands of workers returned to Kolkata after the harvest.",
    "The band toured through Germany and Italy.",
    "Fishermen sailed from Kochi toward Colombo.",
    "She commutes from Pune to Mumbai by train.",
    "Refugees crossed into Bangladesh from the hills.",
    "The couple emigrated from Lahore to Toronto.",
    "Trucks haul rice from Punjab to Karachi.",
    "Investors flew into Singapore for the conference.",
    "Hikers trekked to the base camp near Kathmandu.",
    "The family relocated from Chicago to Miami.",
    "Flights to Paris resumed on Tuesday.",
    "He rode his bike from Amsterdam to Berlin.",
    "The convoy moved slowly through Kabul.",
    "Tourists flocked to Venice for the carnival.",
    "The gold was transported from Dubai to Chennai by air.",
    "Nurses travelled from Manila to London for work.",
    "Traders shipped spices from Kochi to Rotterdam.",
    "The ferry carries passengers from Athens to the islands.",
    "Hundreds of people marched to New Delhi on Monday.",
    "The athletes flew from Sydney to Auckland.",
    "Volunteers drove supplies into Houston after the storm.",
    "Smugglers moved gold through the Chennai airport.",
    "Many tourists come to Rome in spring.",
    "The train from Moscow arrived in Beijing.",
    "Students travelled from Lagos to Nairobi for the tournament.",
    "Passengers boarded the ship in Barcelona.",
    "The truck drivers headed north from Madrid.",
    "Workers commute into Manhattan daily.",
    "The relief flight landed in Kathmandu.",
    "We went from Osaka to Tokyo by bullet train.",
    "Holidaymakers drove from Munich to Zurich.",
]


def main():
    rows = [(t, "impaired") for t in NEGATED + UNNEGATED]
    rows += [(t, "normal") for t in PREFIX_NORMAL + NEGATION_NORMAL + PLAIN_NORMAL]
    assert len(rows) == 100, len(rows)
    random.Random(7).shuffle(rows)
    out = ROOT / "data" / "eval" / "impairment_sample.jsonl"
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", encoding="utf-8") as f:
        for text, label in rows:
            f.write(json.dumps({"text": text, "label": label}) + "\n")


if __name__ == "__main__":
    main()
