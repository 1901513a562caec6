#!/usr/bin/env python3
# Copyright 2026 The sumattack Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/desk_corpus.jsonl.

Synthetic news-register document/highlight pairs built from templates, plus
one transcribed cricket example. References hold one highlight per line.
Output is deterministic; the checksum is
pinned in the tests, so rerun only when the corpus is meant to change.
"""

import argparse
import json
import random

CRICKET_DOC = (
    "Andrew Flintoff fears Kevin Pietersen is 'running out of time' to resurrect "
    "his England career. The dual Ashes-winning all-rounder is less convinced, "
    "however, about Pietersen's prospects of forcing his way back into Test "
    "contention. Kevin Pietersen scored 170 for Surrey in The Parks as he bids to "
    "earn a recall to the England squad... ... Flintoff senses he no longer has "
    "age on his side. Pietersen has not featured for England since he was "
    "unceremoniously sacked 14 months ago. ... ... Flintoff said ... 'If he'd "
    "started the season last year with Surrey, and scored run after run and put "
    "himself in the position... whereas now I think he's looking at the Ashes "
    "... ... you get the sense everyone within the England set-up wants him as "
    "captain,' he said.' ... The former England star is hoping to win back his "
    "Test place with a return to red ball cricket. ... ... 'this stands up as a "
    "competition.'"
)
CRICKET_REF = (
    "Kevin Pietersen was sacked by England 14 months ago after Ashes defeat.\n"
    "Batsman scored 170 on his county cricket return for Surrey last week.\n"
    "Pietersen wants to make a sensational return to the England side this year.\n"
    "But Andrew Flintoff thinks time is running out for him to resurrect career."
)

FIRST = ["Maria", "James", "Aisha", "Tomas", "Helen", "David", "Priya", "Samuel",
         "Grace", "Oliver", "Nadia", "Lucas", "Fiona", "Daniel", "Ruth", "Marcus"]
LAST = ["Hughes", "Okafor", "Lindqvist", "Moreno", "Patel", "Brennan", "Castillo",
        "Whitaker", "Nakamura", "Dubois", "Harrington", "Kowalski", "Fraser", "Ibsen"]
TOWNS = ["Leeds", "Bristol", "Norwich", "Cardiff", "Glasgow", "Exeter", "York",
         "Belfast", "Swansea", "Derby", "Aberdeen", "Brighton", "Lincoln", "Bath"]
DAYS = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"]

FRAMES = {
    "flood": {
        "lead": [
            "Residents of {town} spent {day} clearing mud and debris after the worst flooding the area has seen in decades.",
            "Heavy rain fell for more than {n1} hours, sending the river over its banks and into the town centre.",
            "Emergency crews worked through the night to reach homes cut off by the rising water.",
        ],
        "body": [
            "Council leader {name} said {n2} homes had been evacuated and {n3} families were staying in temporary shelters.",
            "The river peaked at {n4} metres above its normal level shortly before midnight.",
            "Insurers estimate the damage could cost more than {n5} million pounds to repair.",
            "{name2}, who has lived on the same street for {n1} years, said the water reached the top of her kitchen table.",
            "Forecasters have warned that more rain is expected later in the week.",
            "A local school has been turned into a centre for volunteers handing out food and blankets.",
        ],
        "ref": [
            "{n2} homes in {town} were evacuated after the river burst its banks.",
            "Council leader {name} said {n3} families are in temporary shelters.",
            "Damage could cost more than {n5} million pounds to repair.",
            "Forecasters warn more rain is expected later in the week.",
        ],
    },
    "football": {
        "lead": [
            "{town} City ended a run of {n1} games without a win on {day} night.",
            "The home crowd had grown restless during a difficult autumn for the club.",
            "Manager {name} had described the match as the most important of his short spell in charge.",
        ],
        "body": [
            "Striker {name2} scored twice in the second half to seal a {n2}-1 victory.",
            "The win lifts the side up to {n3}th place in the table.",
            "{name} praised the character of his players after the final whistle.",
            "The club confirmed that captain {name3} will miss the next month with a knee injury.",
            "A crowd of {n4},000 watched the game, the biggest attendance of the season.",
            "The visitors had a late goal ruled out for offside.",
        ],
        "ref": [
            "{name2} scored twice as {town} City won {n2}-1.",
            "The win ends a run of {n1} games without a victory.",
            "Captain {name3} will miss the next month with a knee injury.",
            "A crowd of {n4},000 watched the game at home.",
        ],
    },
    "budget": {
        "lead": [
            "Ministers unveiled a spending plan on {day} that they said would protect public services.",
            "The announcement followed weeks of speculation about cuts to local government.",
            "Opposition parties said the plan did little to help families with rising bills.",
        ],
        "body": [
            "Finance minister {name} said an extra {n1} billion pounds would go to hospitals over {n2} years.",
            "Funding for road repairs will rise by {n3} per cent next year.",
            "The plan also includes a freeze on fuel duty for a further twelve months.",
            "{name2}, a spokesman for the opposition, called the package a missed opportunity.",
            "Economists said growth forecasts had been revised down to {n4} per cent.",
            "Councils in {town} and elsewhere had warned of closures to libraries and youth centres.",
        ],
        "ref": [
            "An extra {n1} billion pounds will go to hospitals over {n2} years.",
            "Funding for road repairs will rise by {n3} per cent.",
            "Fuel duty will be frozen for a further twelve months.",
            "Growth forecasts were revised down to {n4} per cent.",
        ],
    },
    "science": {
        "lead": [
            "Researchers in {town} say they have found a new way to detect a common disease years earlier than current tests.",
            "The work has been published in a leading medical journal.",
            "Doctors have long struggled to spot the condition before symptoms appear.",
        ],
        "body": [
            "The team, led by professor {name}, studied blood samples from {n1} volunteers over {n2} years.",
            "They found that a simple test correctly identified the disease in {n3} per cent of cases.",
            "{name} said the test could be available in hospitals within {n4} years.",
            "The research was funded by a charity and cost around {n5} million pounds.",
            "Other scientists welcomed the results but said larger trials were needed.",
            "Patients involved in the study were aged between forty and seventy.",
        ],
        "ref": [
            "Scientists in {town} have developed a blood test for a common disease.",
            "The test identified the disease in {n3} per cent of cases.",
            "Professor {name} studied samples from {n1} volunteers over {n2} years.",
            "The test could be in hospitals within {n4} years.",
        ],
    },
    "court": {
        "lead": [
            "A former accountant from {town} has been jailed for stealing from the charity where she worked.",
            "The court heard that the thefts took place over several years.",
            "The charity said it had been left in serious financial difficulty.",
        ],
        "body": [
            "{name} took more than {n1},000 pounds by transferring money into her own accounts.",
            "She spent the money on holidays, jewellery and a new car, the court was told.",
            "Judge {name2} sentenced her to {n2} years in prison on {day}.",
            "The judge said it was a gross breach of trust.",
            "The charity supports around {n3} elderly people in the region.",
            "Police began investigating after an auditor noticed missing funds.",
        ],
        "ref": [
            "{name} took more than {n1},000 pounds from a charity in {town}.",
            "She spent the money on holidays, jewellery and a new car.",
            "She was sentenced to {n2} years in prison.",
            "The judge said it was a gross breach of trust.",
        ],
    },
    "transport": {
        "lead": [
            "Commuters in {town} faced long delays on {day} after a signal failure brought trains to a standstill.",
            "Services were suspended for most of the morning rush hour.",
            "Passengers complained of overcrowded platforms and a lack of information.",
        ],
        "body": [
            "Rail operator spokesman {name} said engineers fixed the fault by late morning.",
            "Around {n1},000 passengers were affected by the disruption.",
            "It was the {n2}th major failure on the line this year.",
            "Local politician {name2} called for an urgent review of the signalling system.",
            "Replacement buses were laid on between {town} and nearby stations.",
            "The operator said passengers could claim refunds for delays of more than {n3} minutes.",
        ],
        "ref": [
            "A signal failure stopped trains in {town} during the morning rush hour.",
            "Around {n1},000 passengers were affected.",
            "It was the {n2}th major failure on the line this year.",
            "Passengers can claim refunds for delays of more than {n3} minutes.",
        ],
    },
    "wildlife": {
        "lead": [
            "A rare bird has been spotted near {town} for the first time in more than a century.",
            "Birdwatchers have travelled from across the country to catch a glimpse of it.",
            "Conservation groups say the sighting is a sign that restoration work is paying off.",
        ],
        "body": [
            "The bird was first seen by local volunteer {name} on {day} morning.",
            "Experts believe it was blown off course during strong winds.",
            "Wetland habitat around the reserve has been restored over the past {n1} years.",
            "More than {n2} people visited the reserve over the weekend.",
            "Warden {name2} asked visitors to keep their distance and stay on marked paths.",
            "The species was once common but numbers fell sharply after its habitat was drained.",
        ],
        "ref": [
            "A rare bird has been seen near {town} for the first time in a century.",
            "It was first spotted by volunteer {name}.",
            "More than {n2} people visited the reserve over the weekend.",
            "Wetland habitat has been restored over the past {n1} years.",
        ],
    },
    "business": {
        "lead": [
            "A factory in {town} is to close with the loss of hundreds of jobs, its owners announced on {day}.",
            "The company blamed rising energy costs and falling demand.",
            "Unions described the decision as a devastating blow to the area.",
        ],
        "body": [
            "Around {n1} workers will lose their jobs when the site shuts next year.",
            "The factory has made kitchen appliances for more than {n2} years.",
            "Chief executive {name} said the company had explored every option to keep it open.",
            "Production will move to a plant overseas.",
            "Union official {name2} said workers had been given no warning.",
            "The local council said it would set up a support service to help staff find new work.",
        ],
        "ref": [
            "A factory in {town} will close with the loss of around {n1} jobs.",
            "The company blamed rising energy costs and falling demand.",
            "Production will move to a plant overseas.",
            "Union official {name2} said workers had been given no warning.",
        ],
    },
    "school": {
        "lead": [
            "A primary school in {town} has been rated outstanding for the first time.",
            "Inspectors praised the school for its teaching and its care for pupils.",
            "Only a few years ago the school was placed in special measures.",
        ],
        "body": [
            "Head teacher {name} said the result was down to the hard work of staff and families.",
            "The school has around {n1} pupils aged four to eleven.",
            "Inspectors said reading standards had improved dramatically.",
            "More than {n2} per cent of pupils now meet the expected standard in maths.",
            "Parent {name2} said her children loved going to school.",
            "The school plans to share its methods with other schools in the area.",
        ],
        "ref": [
            "A primary school in {town} has been rated outstanding.",
            "Head teacher {name} credited staff and families.",
            "More than {n2} per cent of pupils meet the expected standard in maths.",
            "The school was once placed in special measures.",
        ],
    },
    "fire": {
        "lead": [
            "Firefighters battled a large blaze at a warehouse in {town} overnight.",
            "Thick smoke could be seen for miles and residents were told to keep windows closed.",
            "Nobody was injured in the fire.",
        ],
        "body": [
            "Around {n1} firefighters and {n2} engines were sent to the scene on {day} evening.",
            "The fire started in the roof and spread quickly through the building.",
            "Station manager {name} said crews were likely to remain at the site for several days.",
            "The warehouse stored furniture and paper products.",
            "Investigators are working to establish the cause.",
            "Nearby roads were closed and bus services were diverted.",
        ],
        "ref": [
            "Around {n1} firefighters tackled a warehouse blaze in {town}.",
            "Nobody was injured in the fire.",
            "The fire started in the roof and spread quickly.",
            "Investigators are working to establish the cause.",
        ],
    },
}


def person(rng):
    return f"{rng.choice(FIRST)} {rng.choice(LAST)}"


def make_pair(rng, index):
    frame_name = sorted(FRAMES)[index % len(FRAMES)]
    frame = FRAMES[frame_name]
    slots = {
        "town": rng.choice(TOWNS),
        "day": rng.choice(DAYS),
        "name": person(rng),
        "name2": person(rng),
        "name3": person(rng),
        "n1": rng.randint(12, 60),
        "n2": rng.randint(2, 9),
        "n3": rng.randint(20, 95),
        "n4": rng.randint(3, 40),
        "n5": rng.randint(5, 90),
    }
    body = frame["body"][:]
    rng.shuffle(body)
    doc = " ".join(s.format(**slots) for s in frame["lead"] + body)
    ref_lines = frame["ref"][:]
    keep = sorted(rng.sample(range(len(ref_lines)), 3))
    ref = "\n".join(ref_lines[i].format(**slots) for i in keep)
    return {"id": f"desk-{index:03d}", "document": doc, "reference": ref}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data/desk_corpus.jsonl")
    ap.add_argument("--seed", type=int, default=20231)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    rows = [{"id": "desk-000", "document": CRICKET_DOC, "reference": CRICKET_REF}]
    rows += [make_pair(rng, i) for i in range(1, 50)]
    with open(args.out, "w", encoding="utf-8", newline="\n") as f:
        for r in rows:
            f.write(json.dumps(r, ensure_ascii=False, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main()
