"""Regenerate the bundled corpus and taxonomy under src/helpgen/data.

Derivations are written with a few constructor helpers; internal categories
are computed with the rule table, so every tree validates by construction.

    python scripts/build_data.py
"""
from __future__ import annotations

import json
from pathlib import Path

from helpgen.deriv import Internal, Leaf, Sentence, combine, parse_category, sentence_to_json, validate

DATA = Path(__file__).resolve().parents[1] / "src" / "helpgen" / "data"

# ---------------------------------------------------------------------------
# taxonomy: sense -> (hypernyms, gloss, form overrides)

NOUNS = {
    "entity.n.01": ([], "that which exists", {}),
    "organism.n.01": (["entity.n.01"], "a living thing", {}),
    "person.n.01": (["organism.n.01"], "a human being", {"pl": "people"}),
    "adult.n.01": (["person.n.01"], "a fully grown person", {}),
    "man.n.01": (["adult.n.01"], "an adult male person", {"pl": "men"}),
    "gentleman.n.01": (["man.n.01"], "a man of refinement", {"pl": "gentlemen"}),
    "woman.n.01": (["adult.n.01"], "an adult female person", {"pl": "women"}),
    "widow.n.01": (["woman.n.01"], "a woman whose husband has died", {}),
    "juvenile.n.01": (["person.n.01"], "a young person", {}),
    "child.n.01": (["juvenile.n.01"], "a young person of either sex", {"pl": "children"}),
    "kid.n.01": (["person.n.01"], "a young person", {}),
    "foster_child.n.01": (["kid.n.01"], "a child raised by foster parents",
                          {"pl": "foster children"}),
    "schoolchild.n.01": (["child.n.01"], "a child attending school",
                         {"pl": "schoolchildren"}),
    "baby.n.01": (["child.n.01"], "a very young child", {"pl": "babies"}),
    "boy.n.01": (["person.n.01"], "a youthful male person", {}),
    "schoolboy.n.01": (["boy.n.01"], "a boy attending school", {}),
    "girl.n.01": (["person.n.01"], "a young woman", {}),
    "schoolgirl.n.01": (["girl.n.01"], "a girl attending school", {}),
    "parent.n.01": (["person.n.01"], "a father or mother", {}),
    "mother.n.01": (["parent.n.01"], "a female parent", {}),
    "relative.n.01": (["person.n.01"], "a person related by blood or marriage", {}),
    "sibling.n.01": (["relative.n.01"], "a person's brother or sister", {}),
    "brother.n.01": (["sibling.n.01"], "a male with the same parents as someone else", {}),
    "worker.n.01": (["person.n.01"], "a person who works at a specific occupation", {}),
    "farmer.n.01": (["worker.n.01"], "a person who operates a farm", {}),
    "cook.n.01": (["worker.n.01"], "someone who cooks food", {}),
    "chef.n.01": (["cook.n.01"], "a professional cook", {}),
    "fisherman.n.01": (["worker.n.01"], "someone whose occupation is catching fish",
                       {"pl": "fishermen"}),
    "professional.n.01": (["worker.n.01"], "a person engaged in a learned occupation", {}),
    "lawyer.n.01": (["professional.n.01"], "a professional person authorized to practice law", {}),
    "engineer.n.01": (["professional.n.01"], "a person who uses scientific knowledge to design", {}),
    "health_professional.n.01": (["professional.n.01"], "a professional in the health field",
                                 {"pl": "health professionals"}),
    "doctor.n.01": (["health_professional.n.01"], "a licensed medical practitioner", {}),
    "surgeon.n.01": (["doctor.n.01"], "a physician who performs operations", {}),
    "nurse.n.01": (["health_professional.n.01"], "one skilled in caring for the sick", {}),
    "educator.n.01": (["professional.n.01"], "someone who educates young people", {}),
    "teacher.n.01": (["educator.n.01"], "a person whose occupation is teaching", {}),
    "tutor.n.01": (["teacher.n.01"], "a person who gives private instruction", {}),
    "scientist.n.01": (["person.n.01"], "a person with advanced knowledge of science", {}),
    "biologist.n.01": (["scientist.n.01"], "a scientist who studies living organisms", {}),
    "chemist.n.01": (["scientist.n.01"], "a scientist who specializes in chemistry", {}),
    "official.n.01": (["worker.n.01"], "a worker who holds a position in government", {}),
    "commissioner.n.01": (["official.n.01"], "a member of a commission", {}),
    "police_commissioner.n.01": (["commissioner.n.01"], "the head of a police department",
                                 {"pl": "police commissioners"}),
    "learner.n.01": (["person.n.01"], "someone who is learning", {}),
    "student.n.01": (["learner.n.01"], "a learner who is enrolled in an institution", {}),
    "undergraduate.n.01": (["student.n.01"], "a university student without a degree", {}),
    "traveler.n.01": (["person.n.01"], "a person who changes location", {}),
    "tourist.n.01": (["traveler.n.01"], "someone who travels for pleasure", {}),
    "passenger.n.01": (["traveler.n.01"], "a traveler riding in a vehicle", {}),
    "serviceman.n.01": (["person.n.01"], "someone who serves in the armed forces",
                        {"pl": "servicemen"}),
    "soldier.n.01": (["serviceman.n.01"], "an enlisted man or woman who serves in an army", {}),
    "infantryman.n.01": (["soldier.n.01"], "a soldier who fights on foot",
                         {"pl": "infantrymen"}),
    "performer.n.01": (["person.n.01"], "an entertainer who performs", {}),
    "musician.n.01": (["performer.n.01"], "someone who plays a musical instrument", {}),
    "guitarist.n.01": (["musician.n.01"], "a musician who plays the guitar", {}),
    "pianist.n.01": (["musician.n.01"], "a musician who plays the piano", {}),
    "athlete.n.01": (["person.n.01"], "a person trained to compete in sports", {}),
    "swimmer.n.01": (["athlete.n.01"], "a trained athlete who participates in swimming", {}),
    "visitor.n.01": (["person.n.01"], "someone who visits", {}),
    "guest.n.01": (["visitor.n.01"], "a visitor to whom hospitality is extended", {}),
    "customer.n.01": (["person.n.01"], "someone who pays for goods or services", {}),
    "patient.n.01": (["person.n.01"], "a person who requires medical care", {}),
    "pilot.n.01": (["worker.n.01"], "someone who is licensed to operate an aircraft", {}),
    # animals
    "animal.n.01": (["organism.n.01"], "a living organism that moves voluntarily", {}),
    "domestic_animal.n.01": (["animal.n.01"], "an animal domesticated by man",
                             {"pl": "domestic animals"}),
    "dog.n.01": (["domestic_animal.n.01"], "a domesticated member of the genus canis", {}),
    "puppy.n.01": (["dog.n.01"], "a young dog", {"pl": "puppies"}),
    "poodle.n.01": (["dog.n.01"], "an intelligent dog with a heavy curly coat", {}),
    "feline.n.01": (["animal.n.01"], "any of various lithe-bodied mammals", {}),
    "cat.n.01": (["feline.n.01"], "a feline mammal kept as a pet", {}),
    "kitten.n.01": (["cat.n.01"], "a young domestic cat", {}),
    "bird.n.01": (["animal.n.01"], "a warm-blooded egg-laying vertebrate with feathers", {}),
    "songbird.n.01": (["bird.n.01"], "a bird that sings", {}),
    "sparrow.n.01": (["bird.n.01"], "a small brown bird", {}),
    "insect.n.01": (["animal.n.01"], "a small air-breathing arthropod", {}),
    "beetle.n.01": (["insect.n.01"], "an insect having biting mouthparts", {}),
    "ant.n.01": (["insect.n.01"], "a social insect living in colonies", {}),
    # plants and food
    "plant.n.01": (["organism.n.01"], "a living organism lacking the power of locomotion", {}),
    "flower.n.01": (["plant.n.01"], "a plant cultivated for its blooms", {}),
    "mexican_sunflower.n.01": (["flower.n.01"], "a tall annual flower with orange heads",
                               {"base": "Mexican sunflower", "pl": "Mexican sunflowers"}),
    "rose.n.01": (["flower.n.01"], "a shrub or vine with showy flowers", {}),
    "tree.n.01": (["plant.n.01"], "a tall perennial woody plant", {}),
    "food.n.01": (["entity.n.01"], "any solid substance used as a source of nourishment", {}),
    "fruit.n.01": (["food.n.01"], "the ripened reproductive body of a seed plant", {}),
    "vegetable.n.01": (["food.n.01"], "edible seeds or roots or stems of a plant", {}),
    "carrot.n.01": (["vegetable.n.01"], "an orange root vegetable", {}),
    "broccoli.n.01": (["vegetable.n.01"], "a plant with dense clusters of green buds",
                      {"pl": "broccoli"}),
    "meat.n.01": (["food.n.01"], "the flesh of animals used as food", {"pl": "meat"}),
    "beef.n.01": (["meat.n.01"], "meat from an adult domestic bovine", {"pl": "beef"}),
    "pork.n.01": (["meat.n.01"], "meat from a domestic hog", {"pl": "pork"}),
    "baked_goods.n.01": (["food.n.01"], "foods baked in an oven", {"base": "baked goods"}),
    "cake.n.01": (["baked_goods.n.01"], "baked goods made from a sweet batter", {}),
    "cookie.n.01": (["baked_goods.n.01"], "any of various small flat sweet cakes", {}),
    "grain.n.01": (["food.n.01"], "foodstuff prepared from cereal plants", {}),
    "wheat.n.01": (["grain.n.01"], "grains of common wheat", {"pl": "wheat"}),
    "corn.n.01": (["grain.n.01"], "ears of maize", {"pl": "corn"}),
    "rice.n.01": (["grain.n.01"], "grains used as food", {"pl": "rice"}),
    "seasoning.n.01": (["food.n.01"], "something added to food to give flavor", {}),
    "salt.n.01": (["seasoning.n.01"], "white crystalline form of sodium chloride", {}),
    "pepper.n.01": (["seasoning.n.01"], "pungent seasoning from the berry of a vine", {}),
    "beverage.n.01": (["food.n.01"], "any liquid suitable for drinking", {}),
    "coffee.n.01": (["beverage.n.01"], "a beverage made from roasted coffee beans",
                    {"pl": "coffee"}),
    "espresso.n.01": (["coffee.n.01"], "strong black coffee brewed by steam", {"pl": "espresso"}),
    "tea.n.01": (["beverage.n.01"], "a beverage made by steeping tea leaves", {"pl": "tea"}),
    "alcohol.n.01": (["beverage.n.01"], "a liquor or brew containing alcohol",
                     {"pl": "alcohol"}),
    "wine.n.01": (["alcohol.n.01"], "fermented juice of grapes", {"pl": "wine"}),
    "champagne.n.01": (["wine.n.01"], "a white sparkling wine", {"pl": "champagne"}),
    "beer.n.01": (["alcohol.n.01"], "a general name for alcoholic beverages made by fermenting",
                  {"pl": "beer"}),
    "lager.n.01": (["beer.n.01"], "a light beer", {"pl": "lager"}),
    "liquor.n.01": (["alcohol.n.01"], "an alcoholic beverage that is distilled", {"pl": "liquor"}),
    "whisky.n.01": (["liquor.n.01"], "a liquor made from fermented mash of grain",
                    {"pl": "whisky"}),
    "scotch.n.01": (["whisky.n.01"], "whiskey distilled in Scotland", {"pl": "scotch"}),
    "bourbon.n.01": (["whisky.n.01"], "whiskey distilled from a mash of corn", {"pl": "bourbon"}),
    # artifacts
    "artifact.n.01": (["entity.n.01"], "a man-made object", {}),
    "facility.n.01": (["artifact.n.01"], "a building or place that provides a service",
                      {"pl": "facilities"}),
    "water.n.01": (["facility.n.01"], "a facility that provides a source of water",
                   {"pl": "water"}),
    "building.n.01": (["artifact.n.01"], "a structure that has a roof and walls", {}),
    "library.n.01": (["building.n.01"], "a building that houses a collection of books",
                     {"pl": "libraries"}),
    "hospital.n.01": (["building.n.01"], "a building where patients receive treatment", {}),
    "museum.n.01": (["building.n.01"], "a depository for collecting and displaying objects", {}),
    "factory.n.01": (["building.n.01"], "a plant consisting of buildings for manufacturing",
                     {"pl": "factories"}),
    "restaurant.n.01": (["building.n.01"], "a building where people go to eat", {}),
    "hotel.n.01": (["building.n.01"], "a building where travelers can pay for lodging", {}),
    "castle.n.01": (["building.n.01"], "a large fortified building", {}),
    "school.n.01": (["building.n.01"], "a building where young people receive education", {}),
    "room.n.01": (["artifact.n.01"], "an area within a building enclosed by walls", {}),
    "kitchen.n.01": (["room.n.01"], "a room equipped for preparing meals", {}),
    "hall.n.01": (["room.n.01"], "an interior passage or corridor", {}),
    "classroom.n.01": (["room.n.01"], "a room in a school where lessons take place", {}),
    "surface.n.01": (["artifact.n.01"], "the outer boundary of an artifact", {}),
    "floor.n.01": (["surface.n.01"], "the inside lower horizontal surface of a room", {}),
    "dance_floor.n.01": (["floor.n.01"], "a floor for dancing", {"base": "dance floor"}),
    "furniture.n.01": (["artifact.n.01"], "furnishings that make a room ready for occupancy",
                       {"pl": "furniture"}),
    "sofa.n.01": (["furniture.n.01"], "an upholstered seat for more than one person", {}),
    "bed.n.01": (["furniture.n.01"], "a piece of furniture that provides a place to sleep", {}),
    "bunk_bed.n.01": (["bed.n.01"], "beds built one above the other", {"base": "bunk bed"}),
    "publication.n.01": (["artifact.n.01"], "a copy of a printed work offered for distribution",
                         {}),
    "book.n.01": (["publication.n.01"], "a written work or composition that has been published",
                  {}),
    "novel.n.01": (["book.n.01"], "an extended fictional work in prose", {}),
    "textbook.n.01": (["book.n.01"], "a book prepared for use in schools", {}),
    "newspaper.n.01": (["publication.n.01"], "a daily or weekly publication on folded sheets", {}),
    "tabloid.n.01": (["newspaper.n.01"], "a newspaper with half-size pages", {}),
    "document.n.01": (["artifact.n.01"], "writing that provides information", {}),
    "letter.n.01": (["document.n.01"], "a written message addressed to a person", {}),
    "love_letter.n.01": (["letter.n.01"], "a letter about love", {"base": "love letter"}),
    "clothing.n.01": (["artifact.n.01"], "a covering designed to be worn on a person's body",
                      {"pl": "clothing"}),
    "suit.n.01": (["clothing.n.01"], "a set of garments for outerwear of the same fabric", {}),
    "tuxedo.n.01": (["suit.n.01"], "semiformal evening dress for men", {}),
    "dress.n.01": (["clothing.n.01"], "a one-piece garment for a woman", {"pl": "dresses"}),
    "gown.n.01": (["dress.n.01"], "a woman's dress, usually with a close-fitting bodice", {}),
    "headdress.n.01": (["clothing.n.01"], "clothing for the head", {"pl": "headdresses"}),
    "hat.n.01": (["headdress.n.01"], "headdress that protects the head", {}),
    "cowboy_hat.n.01": (["hat.n.01"], "a hat with a wide brim", {"base": "cowboy hat"}),
    "helmet.n.01": (["headdress.n.01"], "armor plate that protects the head", {}),
    "hard_hat.n.01": (["helmet.n.01"], "a lightweight protective helmet", {"base": "hard hat"}),
    "glasses.n.01": (["artifact.n.01"], "optical instrument worn in front of the eyes",
                     {"base": "glasses", "pl": "glasses"}),
    "eye.n.01": (["entity.n.01"], "the organ of sight", {}),
    "weapon.n.01": (["artifact.n.01"], "any instrument used in fighting", {}),
    "gun.n.01": (["weapon.n.01"], "a weapon that discharges a missile", {}),
    "rifle.n.01": (["gun.n.01"], "a shoulder firearm with a long barrel", {}),
    "pistol.n.01": (["gun.n.01"], "a firearm that is held and fired with one hand", {}),
    "vehicle.n.01": (["artifact.n.01"], "a conveyance that transports people or objects", {}),
    "car.n.01": (["vehicle.n.01"], "a motor vehicle with four wheels", {}),
    "taxi.n.01": (["car.n.01"], "a car driven by a person whose job is to take passengers", {}),
    "bus.n.01": (["vehicle.n.01"], "a vehicle carrying many passengers", {"pl": "buses"}),
    "aircraft.n.01": (["vehicle.n.01"], "a vehicle that can fly", {"pl": "aircraft"}),
    "plane.n.01": (["aircraft.n.01"], "an aircraft that has a fixed wing", {}),
    "jet.n.01": (["plane.n.01"], "an airplane powered by jet engines", {}),
    "musical_instrument.n.01": (["artifact.n.01"], "any of various devices to make music",
                                {"base": "musical instrument"}),
    "guitar.n.01": (["musical_instrument.n.01"], "a stringed instrument with a flat body", {}),
    "electric_guitar.n.01": (["guitar.n.01"], "a guitar whose sound is amplified",
                             {"base": "electric guitar"}),
    "piano.n.01": (["musical_instrument.n.01"], "a keyboard instrument", {}),
    "picture.n.01": (["artifact.n.01"], "a visual representation", {}),
    "photo.n.01": (["picture.n.01"], "a representation produced on a sensitive surface", {}),
    "souvenir.n.01": (["artifact.n.01"], "something of sentimental value", {}),
    "plate.n.01": (["artifact.n.01"], "dish on which food is served", {}),
    # places and events
    "area.n.01": (["entity.n.01"], "a particular geographical region", {}),
    "garden.n.01": (["area.n.01"], "a plot of ground where plants are cultivated", {}),
    "herb_garden.n.01": (["garden.n.01"], "a garden for herbs", {"base": "herb garden"}),
    "yard.n.01": (["area.n.01"], "the grounds around a house", {}),
    "park.n.01": (["area.n.01"], "a large area of land preserved in its natural state", {}),
    "forest.n.01": (["area.n.01"], "land that is covered with trees and shrubs", {}),
    "farm.n.01": (["area.n.01"], "workplace consisting of farm buildings and cultivated land",
                  {}),
    "street.n.01": (["area.n.01"], "a thoroughfare lined with buildings", {}),
    "body_of_water.n.01": (["entity.n.01"], "the part of the earth's surface covered with water",
                           {"base": "body of water", "pl": "bodies of water"}),
    "lake.n.01": (["body_of_water.n.01"], "a body of water surrounded by land", {}),
    "ocean.n.01": (["body_of_water.n.01"], "a large body of water", {}),
    "river.n.01": (["body_of_water.n.01"], "a large natural stream of water", {}),
    "slope.n.01": (["area.n.01"], "an elevated geological formation", {}),
    "bank.n.01": (["slope.n.01"], "sloping land beside a body of water such as a river", {}),
    "bank.n.02": (["building.n.01"], "a financial institution that accepts deposits and "
                  "channels the money into lending", {}),
    "money.n.01": ([], "the most common medium of exchange", {"pl": "money"}),
    "event.n.01": (["entity.n.01"], "something that happens at a given place and time", {}),
    "gathering.n.01": (["event.n.01"], "a group of persons together in one place", {}),
    "party.n.01": (["gathering.n.01"], "an occasion on which people can assemble for "
                   "social interaction", {"pl": "parties"}),
    "birthday_party.n.01": (["party.n.01"], "a party held on someone's birthday",
                            {"base": "birthday party", "pl": "birthday parties"}),
    "meeting.n.01": (["gathering.n.01"], "a formally arranged gathering", {}),
    "wedding.n.01": (["gathering.n.01"], "the social event at which the ceremony of "
                     "marriage is performed", {}),
    "concert.n.01": (["gathering.n.01"], "a performance of music by players or singers", {}),
    "accident.n.01": (["event.n.01"], "an unfortunate mishap", {}),
    "crash.n.01": (["accident.n.01"], "a serious accident involving vehicles",
                   {"pl": "crashes"}),
    "meal.n.01": (["event.n.01"], "the food served and eaten at one time", {}),
    "dinner.n.01": (["meal.n.01"], "the main meal of the day", {}),
    "lunch.n.01": (["meal.n.01"], "a midday meal", {"pl": "lunches"}),
    "exam.n.01": (["event.n.01"], "a set of questions to evaluate knowledge", {}),
    "lecture.n.01": (["event.n.01"], "a speech that is open to the public", {}),
    "drama.n.01": (["entity.n.01"], "the literary genre of works intended for the theater",
                   {"pl": "drama"}),
    "tragedy.n.01": (["drama.n.01"], "drama in which the protagonist is overcome",
                     {"pl": "tragedies"}),
    "comedy.n.01": (["drama.n.01"], "light and humorous drama with a happy ending",
                    {"pl": "comedies"}),
    "farce.n.01": (["comedy.n.01"], "a comedy characterized by broad satire", {}),
    "music.n.01": (["entity.n.01"], "an artistic form of auditory communication", {}),
    "song.n.01": (["music.n.01"], "a short musical composition with words", {}),
    "lullaby.n.01": (["song.n.01"], "a quiet song intended to lull a child to sleep",
                     {"pl": "lullabies"}),
    "sport.n.01": (["event.n.01"], "an active diversion requiring physical exertion", {}),
    "football.n.01": (["sport.n.01"], "any of various games played with a ball", {}),
    "tennis.n.01": (["sport.n.01"], "a game played with rackets", {}),
}

VERBS = {
    "act.v.01": ([], "perform an action", {}),
    "move.v.03": (["act.v.01"], "move so as to change position", {}),
    "dance.v.01": (["move.v.03"], "move in a pattern, usually to musical accompaniment", {}),
    "waltz.v.01": (["dance.v.01"], "dance a waltz", {}),
    "tango.v.01": (["dance.v.01"], "dance a tango", {}),
    "travel.v.01": (["move.v.03"], "change location; move or go", {}),
    "walk.v.01": (["travel.v.01"], "use one's feet to advance", {}),
    "stroll.v.01": (["walk.v.01"], "walk leisurely", {}),
    "run.v.01": (["travel.v.01"], "move fast by using one's feet", {"past": "ran", "pp": "run",
                                                                      "ing": "running"}),
    "sprint.v.01": (["run.v.01"], "run very fast", {}),
    "jog.v.01": (["run.v.01"], "run at a steady slow pace", {"ing": "jogging", "past": "jogged",
                                                              "pp": "jogged"}),
    "swim.v.01": (["travel.v.01"], "travel through water", {"past": "swam", "pp": "swum",
                                                           "ing": "swimming"}),
    "fly.v.01": (["travel.v.01"], "travel through the air", {"past": "flew", "pp": "flown",
                                                            "3sg": "flies"}),
    "perform.v.01": (["act.v.01"], "give a performance of something", {}),
    "sing.v.01": (["perform.v.01"], "produce tones with the voice", {"past": "sang",
                                                                    "pp": "sung"}),
    "hum.v.01": (["sing.v.01"], "sing with closed lips", {"past": "hummed", "pp": "hummed",
                                                         "ing": "humming"}),
    "play.v.01": (["perform.v.01"], "participate in games or sport", {}),
    "consume.v.02": (["act.v.01"], "serve oneself to, or consume regularly", {}),
    "eat.v.01": (["consume.v.02"], "take in solid food", {"past": "ate", "pp": "eaten"}),
    "devour.v.01": (["eat.v.01"], "eat greedily", {}),
    "drink.v.01": (["consume.v.02"], "take in liquids", {"past": "drank", "pp": "drunk"}),
    "sip.v.01": (["drink.v.01"], "drink in sips", {"past": "sipped", "pp": "sipped",
                                                  "ing": "sipping"}),
    "get.v.01": ([], "come into the possession of something",
                 {"past": "got", "pp": "gotten", "ing": "getting"}),
    "buy.v.01": (["get.v.01"], "obtain by purchase", {"past": "bought", "pp": "bought"}),
    "create.v.01": (["act.v.01"], "make or cause to be", {}),
    "write.v.01": (["create.v.01"], "produce a literary work", {"past": "wrote",
                                                              "pp": "written"}),
    "design.v.01": (["create.v.01"], "make a design of", {}),
    "read.v.01": ([], "interpret something that is written or printed",
                  {"past": "read", "pp": "read"}),
    "skim.v.01": (["read.v.01"], "read superficially", {"past": "skimmed", "pp": "skimmed",
                                                       "ing": "skimming"}),
    "pursue.v.01": ([], "follow in or as if in pursuit", {}),
    "chase.v.01": (["pursue.v.01"], "go after with the intent to catch", {}),
    "rest.v.01": (["act.v.01"], "take a short break from activities", {}),
    "sleep.v.01": (["rest.v.01"], "be asleep", {"past": "slept", "pp": "slept"}),
    "nap.v.01": (["sleep.v.01"], "take a siesta", {"past": "napped", "pp": "napped",
                                                  "ing": "napping"}),
    "cancel.v.01": ([], "postpone indefinitely or annul", {"past": "canceled",
                                                                   "pp": "canceled"}),
    "carry.v.01": ([], "move while supporting", {"past": "carried", "pp": "carried",
                                                          "3sg": "carries"}),
    "wear.v.01": ([], "be dressed in", {"past": "wore", "pp": "worn"}),
    "visit.v.01": ([], "go to see a place as for entertainment", {}),
    "own.v.01": ([], "have ownership or possession of", {}),
    "remove.v.01": ([], "remove something concrete", {}),
    "rub.v.01": ([], "move over something with pressure", {"past": "rubbed",
                                                                     "pp": "rubbed",
                                                                     "ing": "rubbing"}),
    "study.v.01": (["act.v.01"], "be a student of a certain subject",
                   {"past": "studied", "pp": "studied", "3sg": "studies"}),
    "examine.v.01": (["study.v.01"], "observe or inspect carefully", {}),
    "hurt.v.01": ([], "cause injuries or bodily harm to", {"past": "hurt",
                                                                    "pp": "hurt"}),
    "injure.v.01": (["hurt.v.01"], "cause injuries to", {}),
    "help.v.01": ([], "give help or assistance", {}),
    "grow.v.01": ([], "cultivate by growing", {"past": "grew", "pp": "grown"}),
    "cry.v.01": ([], "shed tears because of sadness", {"past": "cried", "pp": "cried",
                                                               "3sg": "cries"}),
    "sob.v.01": (["cry.v.01"], "weep convulsively", {"past": "sobbed", "pp": "sobbed",
                                                    "ing": "sobbing"}),
    "bark.v.01": ([], "make barking sounds", {}),
    "smoke.v.01": ([], "inhale and exhale smoke from cigarettes", {}),
    "take.v.01": ([], "get into one's hands", {"past": "took", "pp": "taken"}),
    "use.v.01": ([], "put into service", {}),
    "cook.v.01": (["create.v.01"], "prepare a hot meal", {}),
    "bake.v.01": (["cook.v.01"], "cook and make edible by putting in a hot oven", {}),
    "sit.v.01": (["rest.v.01"], "be seated", {"past": "sat", "pp": "sat", "ing": "sitting"}),
    "put.v.01": ([], "put into a certain place", {"past": "put", "pp": "put", "ing": "putting"}),
    "deposit.v.01": (["put.v.01"], "put money into a bank account", {}),
    "watch.v.01": ([], "look attentively", {"3sg": "watches"}),
    "arrive.v.01": (["travel.v.01"], "reach a destination", {}),
    "pass.v.01": ([], "go successfully through a test", {"3sg": "passes"}),
}

ADJECTIVES = {}


def _noun_pl(base: str) -> str:
    if base.endswith(("s", "x", "ch", "sh")):
        return base + "es"
    if base.endswith("y") and base[-2] not in "aeiou":
        return base[:-1] + "ies"
    return base + "s"


def _verb_forms(base: str) -> dict:
    if base.endswith("e") and not base.endswith("ee"):
        ing, past = base[:-1] + "ing", base + "d"
    else:
        ing, past = base + "ing", base + "ed"
    third = base + "es" if base.endswith(("s", "x", "ch", "sh", "o")) else base + "s"
    return {"past": past, "pp": past, "ing": ing, "3sg": third}


def taxonomy_records() -> list[dict]:
    out = []
    for table, pos in ((NOUNS, "n"), (VERBS, "v"), (ADJECTIVES, "a")):
        for sense, (hyper, gloss, over) in table.items():
            lemma = sense.split(".")[0]
            base = over.get("base", lemma.replace("_", " "))
            if pos == "n":
                forms = {"pl": _noun_pl(base)}
            elif pos == "v":
                forms = _verb_forms(base)
            else:
                forms = {}
            forms.update(over)
            forms.pop("base", None)
            rec = {"sense": sense, "lemma": lemma, "pos": pos, "gloss": gloss.split(),
                   "hypernyms": hyper, "forms": dict(sorted(forms.items()))}
            if "base" in over:
                rec["forms"]["base"] = over["base"]
            out.append(rec)
    return sorted(out, key=lambda r: r["sense"])


STOP_TOKENS = """a an the of to in on at for by with from and or but is are was were be been
being it its this that these those as into over under which who whom whose what where when
than then so such some any all no not one two three very can will would should may might
must do does did has have had he she they them his her their our your my i you we us me
him""".split()

# ---------------------------------------------------------------------------
# derivation helpers

VP = r"S\NP"
TV = r"(S\NP)/NP"
SGQ = r"(S/(S\NP))/N"
OGQ = r"((S\NP)\((S\NP)/NP))/N"
AUX = r"(S\NP)/(S\NP)"
VADV = r"(S\NP)\(S\NP)"
VPP = r"((S\NP)\(S\NP))/NP"
NPP = r"(N\N)/NP"
COND = "(S/S)/S"
COMMA = r"(S/S)\(S/S)"
EXIST = r"S/(S/(S\NP))"

_SENSES_USED: set[str] = set()


def leaf(token, cat, lemma=None, pos="x", semtag="NIL", sense=None):
    if sense:
        _SENSES_USED.add(sense)
    return Leaf(token, lemma or token.lower(), pos, semtag, sense, parse_category(cat))


def _bin(rule, a, b):
    cat = combine(rule, (a, b))
    if cat is None:
        raise ValueError(f"{rule} cannot combine {a.category} and {b.category}")
    return Internal(rule, cat, (a, b))


def fa(a, b):
    return _bin("fa", a, b)


def ba(a, b):
    return _bin("ba", a, b)


def fc(a, b):
    return _bin("fc", a, b)


def unary(cat, child):
    return Internal("unary", parse_category(cat), (child,))


def _lemma(sense, lemma):
    return lemma or (sense.split(".")[0] if sense else None)


def n(token, sense=None, lemma=None, semtag="CON"):
    return leaf(token, "N", _lemma(sense, lemma), "n", semtag, sense)


def name(token):
    return leaf(token, "NP", token.lower(), "n", "PER")


def iv(token, sense=None, lemma=None, semtag="EXG"):
    return leaf(token, VP, _lemma(sense, lemma), "v", semtag, sense)


def tv(token, sense=None, lemma=None, semtag="EXS"):
    return leaf(token, TV, _lemma(sense, lemma), "v", semtag, sense)


def adj(token):
    return leaf(token, "N/N", None, "a", "IST")


def pred(token):
    return leaf(token, VP, None, "a", "IST")


def adv(token):
    return leaf(token, VADV, None, "r", "IST")


def aux(token, lemma, semtag="NOW"):
    return leaf(token, AUX, lemma, "v", semtag)


def det(token, cat, lemma=None):
    lem = (lemma or token).lower()
    semtag = {"all": "AND", "every": "AND", "each": "AND", "some": "DIS", "a": "DIS",
              "an": "DIS", "several": "DIS", "no": "NEG", "neither": "NEG", "both": "DEF",
              "many": "QUV", "few": "QUV"}.get(lem, "DEF")
    if lem.startswith("at most"):
        semtag = "QUV"
    return leaf(token, cat, lem, "x", semtag)


def subj(d, nbar):
    return fa(det(d, SGQ), nbar)


def obj(d, nbar):
    return fa(det(d, OGQ), nbar)


def the(nbar, token="the"):
    return fa(det(token, "NP/N"), nbar)


def bare(nbar):
    return unary("NP", nbar)


def pp(prep, np_, cat=VPP):
    return fa(leaf(prep, cat, None, "x", "REL"), np_)


def vp_obj(verb, o):
    return ba(verb, o)


def coord(x, word, y, cat):
    tag = "AND" if word == "and" else "DIS"
    return ba(x, fa(leaf(word, f"(({cat})\\({cat}))/({cat})", None, "x", tag), y))


def s_np(np_, vp):
    return ba(np_, vp)


def neg(vp):
    return fa(leaf("not", AUX, "not", "x", "NEG"), vp)


def cond(word, ante, cons):
    c = fa(leaf(word, COND, None, "x", "IMP"), ante)
    return fa(ba(c, leaf(",", COMMA, None, "x", "NIL")), cons)


def there(be_token, body, lemma="be"):
    """'there is/are' + a full clause (no N VP)."""
    return fa(fc(leaf("there", "S/S"), leaf(be_token, "S/S", lemma, "v", "NOW")), body)


def there_is(be_token, gq):
    """'there 's' + quantified noun without VP."""
    return fa(fc(leaf("there", "S/S"), leaf(be_token, EXIST, "be", "v", "NOW")), gq)


def cap(node):
    """Capitalize the first token of a tree."""
    if isinstance(node, Leaf):
        return Leaf(node.token[0].upper() + node.token[1:], node.lemma, node.pos, node.semtag,
                    node.sense, node.category)
    return Internal(node.rule, node.category, (cap(node.children[0]),) + node.children[1:])


# ---------------------------------------------------------------------------
# corpus

def corpus() -> list[Sentence]:
    S = []

    def add(id_, root, tier="gold"):
        root = cap(root)
        validate(root)
        S.append(Sentence(id_, root, tier))

    # All kids were dancing on the floor
    add("fig1", fa(subj("all", n("kids", "kid.n.01")),
                   fa(aux("were", "be", "PST"),
                      ba(iv("dancing", "dance.v.01"),
                         pp("on", the(n("floor", "floor.n.01"))))))
        )
    add("ex1", fa(subj("some", n("boys", "boy.n.01")),
                  fa(aux("are", "be"), fa(leaf("happily", AUX, None, "r", "IST"),
                                          iv("dancing", "dance.v.01")))))
    add("ex2", fa(subj("no", n("boys", "boy.n.01")),
                  fa(aux("are", "be"), fa(leaf("happily", AUX, None, "r", "IST"),
                                          iv("dancing", "dance.v.01")))))
    add("ex3", cond("if",
                    there("are", fa(subj("no", n("boys", "boy.n.01")),
                                    ba(iv("dancing", "dance.v.01"), adv("happily")))),
                    s_np(the(n("party", "party.n.01")),
                         fa(aux("might", "might", "POS"),
                            fa(aux("be", "be"), iv("canceled", "cancel.v.01"))))))
    # Table 2 sources
    add("t2-up", s_np(name("Tom"),
                      ba(vp_obj(tv("bought", "buy.v.01"), obj("some", n("flowers", "flower.n.01"))),
                         pp("for", name("Mary")))))
    add("t2-down", cond("if",
                        there_is("'s", subj("no", n("water", "water.n.01"))),
                        there_is("'s", subj("no", n("whisky", "whisky.n.01")))))
    add("t2-non", s_np(name("Shakespeare"),
                       vp_obj(tv("wrote", "write.v.01"),
                              obj("both", coord(n("tragedy", "tragedy.n.01"), "and",
                                                n("comedy", "comedy.n.01"), "N")))))
    add("t2-conj", s_np(name("Tom"),
                        coord(fa(tv("removed", "remove.v.01"), the(n("glasses", "glasses.n.01"), "his")),
                              "and",
                              fa(tv("rubbed", "rub.v.01"), the(n("eyes", "eye.n.01"), "his")),
                              VP)))
    add("t2-disj", s_np(the(n("trees", "tree.n.01")),
                        coord(fa(aux("are", "be"), pred("barren")), "or",
                              fa(tv("bear", None, "bear"),
                                 fa(leaf("only", "NP/NP", None, "r", "FOC"),
                                    bare(fa(adj("small"), n("fruit", "fruit.n.01"))))),
                              VP)))
    add("t1-down", fa(subj("At most ten", adj_n("female", "commissioners", "commissioner.n.01")),
                      ba(fa(tv("spend", None, "spend"), bare(n("time", None, "time"))),
                         pp("at", bare(n("home", None, "home"))))))

    # quantified subjects
    add("g01", fa(subj("every", n("student", "student.n.01")),
                  ba(vp_obj(tv("read", "read.v.01"), obj("a", n("book", "book.n.01"))),
                     pp("in", the(n("library", "library.n.01"))))))
    add("g02", fa(subj("no", n("dog", "dog.n.01")),
                  ba(vp_obj(tv("chased", "chase.v.01"), obj("a", n("cat", "cat.n.01"))),
                     pp("in", the(n("garden", "garden.n.01"))))))
    add("g03", fa(subj("some", n("women", "woman.n.01")),
                  ba(coord(iv("sang", "sing.v.01"), "and", iv("danced", "dance.v.01"), VP),
                     pp("at", the(n("party", "party.n.01"))))))
    add("g04", fa(subj("each", n("teacher", "teacher.n.01")),
                  ba(vp_obj(tv("wrote", "write.v.01"), obj("a", n("letter", "letter.n.01"))),
                     pp("to", the(n("parents", "parent.n.01"))))))
    add("g05", fa(subj("all", n("cats", "cat.n.01")),
                  fa(aux("were", "be", "PST"),
                     ba(iv("sleeping", "sleep.v.01"), pp("on", the(n("sofa", "sofa.n.01")))))))
    add("g06", fa(subj("no", n("students", "student.n.01")),
                  fa(aux("were", "be", "PST"),
                     ba(iv("running", "run.v.01"), pp("in", the(n("hall", "hall.n.01")))))))
    add("g07", fa(subj("some", n("doctors", "doctor.n.01")),
                  fa(aux("did", "do", "PST"),
                     neg(fa(tv("drink", "drink.v.01"), bare(n("coffee", "coffee.n.01")))))))
    add("g08", cond("if",
                    fa(subj("every", n("student", "student.n.01")),
                       fa(tv("passes", "pass.v.01"), the(n("exam", "exam.n.01")))),
                    s_np(the(n("teacher", "teacher.n.01")),
                         fa(aux("is", "be"), pred("happy")))))
    add("g09", fa(subj("both", n("dogs", "dog.n.01")),
                  fa(aux("were", "be", "PST"),
                     ba(ba(iv("barking", "bark.v.01"), adv("loudly")),
                        pp("in", the(n("yard", "yard.n.01")))))))
    add("g10", s_np(name("Tom"),
                    fa(tv("drank", "drink.v.01"),
                       bare(coord(n("wine", "wine.n.01"), "or", n("beer", "beer.n.01"), "N")))))
    add("g11", fa(subj("every", n("guest", "guest.n.01")),
                  ba(fa(tv("drank", "drink.v.01"),
                        bare(coord(n("wine", "wine.n.01"), "or", n("beer", "beer.n.01"), "N"))),
                     pp("at", the(n("wedding", "wedding.n.01"))))))
    add("g12", fa(subj("some", n("girls", "girl.n.01")),
                  fa(aux("were", "be", "PST"),
                     ba(coord(iv("singing", "sing.v.01"), "and", iv("dancing", "dance.v.01"), VP),
                        pp("in", the(n("street", "street.n.01")))))))
    add("g13", fa(subj("no", n("child", "child.n.01")),
                  fa(tv("ate", "eat.v.01"),
                     bare(coord(n("cake", "cake.n.01"), "or", n("cookies", "cookie.n.01"), "N")))))
    add("g14", fa(subj("every", n("farmer", "farmer.n.01")),
                  ba(fa(tv("grows", "grow.v.01"),
                        bare(coord(n("wheat", "wheat.n.01"), "or", n("corn", "corn.n.01"), "N"))),
                     pp("on", the(n("farm", "farm.n.01"))))))
    add("g15", fa(subj("all", n("musicians", "musician.n.01")),
                  ba(fa(tv("played", "play.v.01"), the(n("guitar", "guitar.n.01"))),
                     pp("at", the(n("concert", "concert.n.01"))))))
    add("g16", fa(subj("some", n("scientists", "scientist.n.01")),
                  ba(fa(tv("studied", "study.v.01"), bare(n("insects", "insect.n.01"))),
                     pp("in", the(n("forest", "forest.n.01"))))))
    add("g17", fa(subj("no", n("passengers", "passenger.n.01")),
                  fa(aux("were", "be", "PST"),
                     ba(iv("injured", "injure.v.01"),
                        pp("in", the(n("accident", "accident.n.01")))))))
    add("g18", cond("when",
                    s_np(the(n("baby", "baby.n.01")), iv("cries", "cry.v.01")),
                    s_np(the(n("mother", "mother.n.01")),
                         vp_obj(tv("sings", "sing.v.01"), obj("a", n("song", "song.n.01"))))))
    add("g19", cond("unless",
                    s_np(the(n("bus", "bus.n.01")), ba(iv("arrives", "arrive.v.01"), adv("soon"))),
                    s_np(the(n("children", "child.n.01")),
                         fa(aux("will", "will", "FUT"),
                            ba(iv("walk", "walk.v.01"), pp("to", bare(n("school", "school.n.01"))))))))
    add("g20", fa(subj("each", n("nurse", "nurse.n.01")),
                  ba(vp_obj(tv("helped", "help.v.01"), obj("a", n("patient", "patient.n.01"))),
                     pp("in", the(n("hospital", "hospital.n.01"))))))
    add("g21", fa(subj("every", n("pilot", "pilot.n.01")),
                  ba(vp_obj(tv("flew", "fly.v.01", semtag="EXS"), obj("a", n("plane", "plane.n.01"))),
                     pp("over", the(n("ocean", "ocean.n.01"))))))
    add("g22", fa(subj("a", n("cat", "cat.n.01")),
                  fa(aux("was", "be", "PST"),
                     ba(iv("sleeping", "sleep.v.01"),
                        pp("on", the(fa(adj("warm"), n("bed", "bed.n.01"))))))))
    add("g23", fa(subj("an", fa(adj("old"), n("man", "man.n.01"))),
                  fa(aux("was", "be", "PST"),
                     ba(vp_obj(tv("reading", "read.v.01"), obj("a", n("newspaper", "newspaper.n.01"))),
                        pp("in", the(n("kitchen", "kitchen.n.01")))))))
    add("g24", fa(subj("some", n("kids", "kid.n.01")),
                  fa(aux("did", "do", "PST"),
                     neg(ba(fa(tv("eat", "eat.v.01"), bare(n("vegetables", "vegetable.n.01"))),
                            pp("at", bare(n("dinner", "dinner.n.01"))))))))
    add("g25", fa(subj("all", n("lawyers", "lawyer.n.01")),
                  ba(fa(tv("wore", "wear.v.01"), bare(fa(adj("dark"), n("suits", "suit.n.01")))),
                     pp("to", the(n("meeting", "meeting.n.01"))))))
    add("g26", fa(subj("no", n("soldier", "soldier.n.01")),
                  vp_obj(tv("carried", "carry.v.01"),
                         obj("a", fa(adj("heavy"), n("gun", "gun.n.01"))))))
    add("g27", s_np(name("Mary"),
                    fa(aux("did", "do", "PST"),
                       neg(vp_obj(tv("buy", "buy.v.01"), obj("a", fa(adj("red"), n("dress", "dress.n.01"))))))))
    add("g28", s_np(name("John"),
                    vp_obj(tv("ate", "eat.v.01"),
                           obj("every", ba(n("cookie", "cookie.n.01"),
                                           pp("on", the(n("plate", "plate.n.01")), NPP))))))
    add("g29", s_np(name("Tom"),
                    vp_obj(tv("visited", "visit.v.01"),
                           obj("no", ba(n("museum", "museum.n.01"), pp("in", name("Paris"), NPP))))))
    add("g30", s_np(name("Sue"),
                    ba(vp_obj(tv("wrote", "write.v.01"), obj("both", n("letters", "letter.n.01"))),
                       pp("to", the(n("brother", "brother.n.01"), "her")))))
    add("g31", fa(subj("every", ba(n("worker", "worker.n.01"),
                                   pp("in", the(n("factory", "factory.n.01")), NPP))),
                  vp_obj(tv("wore", "wear.v.01"), obj("a", n("helmet", "helmet.n.01")))))
    add("g32", fa(subj("no", ba(n("cook", "cook.n.01"),
                                pp("in", the(n("restaurant", "restaurant.n.01")), NPP))),
                  fa(tv("used", "use.v.01"), bare(n("salt", "salt.n.01")))))
    add("g33", fa(subj("all", n("birds", "bird.n.01")),
                  fa(aux("were", "be", "PST"),
                     ba(iv("singing", "sing.v.01"), pp("in", the(n("trees", "tree.n.01")))))))
    add("g34", fa(subj("some", coord(n("boys", "boy.n.01"), "and", n("girls", "girl.n.01"), "N")),
                  fa(aux("were", "be", "PST"),
                     ba(iv("swimming", "swim.v.01"), pp("in", the(n("lake", "lake.n.01")))))))
    add("g35", fa(subj("every", n("tourist", "tourist.n.01")),
                  coord(vp_obj(tv("took", "take.v.01"), obj("a", n("photo", "photo.n.01"))), "or",
                        vp_obj(tv("bought", "buy.v.01"), obj("a", n("souvenir", "souvenir.n.01"))),
                        VP)))
    add("g36", fa(subj("no", n("athlete", "athlete.n.01")),
                  coord(iv("smoked", "smoke.v.01"), "or",
                        fa(tv("drank", "drink.v.01"), bare(n("alcohol", "alcohol.n.01"))), VP)))
    add("g37", cond("if",
                    s_np(name("Tom"), vp_obj(tv("owns", "own.v.01"), obj("a", n("car", "car.n.01")))),
                    s_np(name("Tom"),
                         fa(aux("will", "will", "FUT"),
                            fa(tv("visit", "visit.v.01"), the(n("museum", "museum.n.01")))))))
    add("g38", fa(subj("every", n("chef", "chef.n.01")),
                  ba(vp_obj(tv("baked", "bake.v.01"), obj("a", n("cake", "cake.n.01"))),
                     pp("for", the(n("party", "party.n.01"))))))
    add("g39", fa(subj("some", n("engineers", "engineer.n.01")),
                  ba(fa(tv("watched", "watch.v.01"), bare(n("football", "football.n.01"))),
                     pp("in", the(n("park", "park.n.01"))))))
    add("g40", fa(subj("no", n("undergraduate", "undergraduate.n.01")),
                  fa(aux("has", "have", "NOW"),
                     fa(tv("read", "read.v.01"), the(n("novel", "novel.n.01"))))))
    add("g41", s_np(name("Anna"),
                    fa(aux("did", "do", "PST"),
                       neg(ba(iv("sleep", "sleep.v.01"), pp("in", the(n("hotel", "hotel.n.01"))))))))
    add("g42", fa(subj("at most three", n("teachers", "teacher.n.01")),
                  ba(vp_obj(tv("drank", "drink.v.01"), obj("some", n("wine", "wine.n.01"))),
                     pp("at", the(n("party", "party.n.01"))))))

    # outside the crisp fragment
    add("q01", fa(subj("several", n("boys", "boy.n.01")),
                  fa(aux("were", "be", "PST"),
                     ba(fa(tv("playing", "play.v.01"), bare(n("football", "football.n.01"))),
                        pp("in", the(n("park", "park.n.01")))))))
    add("q02", fa(subj("many", n("tourists", "tourist.n.01")),
                  fa(tv("visited", "visit.v.01"), the(fa(adj("old"), n("castle", "castle.n.01"))))))
    add("q03", fa(subj("few", n("people", "person.n.01")),
                  ba(fa(tv("ate", "eat.v.01"), bare(n("meat", "meat.n.01"))),
                     pp("at", the(n("party", "party.n.01"))))))

    # silver tier: senses left for disambiguation
    add("v01", fa(subj("every", n("fisherman", lemma="fisherman")),
                  ba(iv("sat", lemma="sit"),
                     pp("on", the(ba(n("bank", lemma="bank"),
                                     pp("of", the(n("river", lemma="river")), NPP)))))),
        "silver")
    add("v02", fa(subj("some", n("customers", lemma="customer")),
                  ba(fa(tv("deposited", lemma="deposit"), bare(n("money", lemma="money"))),
                     pp("in", the(n("bank", lemma="bank"))))),
        "silver")
    add("v03", fa(subj("no", n("swimmer", lemma="swimmer")),
                  fa(aux("was", "be", "PST"),
                     ba(iv("swimming", lemma="swim"), pp("in", the(n("river", lemma="river")))))),
        "silver")
    add("v04", fa(subj("all", n("chemists", lemma="chemist")),
                  ba(fa(tv("examined", lemma="examine"), bare(n("insects", lemma="insect"))),
                     pp("in", the(n("classroom", lemma="classroom"))))),
        "silver")
    return S


def adj_n(a, token, sense):
    return fa(adj(a), n(token, sense))


def main() -> None:
    sentences = corpus()
    records = taxonomy_records()
    known = {r["sense"] for r in records}
    missing = sorted(_SENSES_USED - known)
    if missing:
        raise SystemExit(f"senses missing from the taxonomy: {missing}")
    with open(DATA / "corpus.jsonl", "w", encoding="utf-8") as f:
        f.write(json.dumps({"atoms": ["NP", "N", "PP", "S"]}) + "\n")
        for s in sentences:
            f.write(json.dumps(sentence_to_json(s), ensure_ascii=False) + "\n")
    with open(DATA / "taxonomy.jsonl", "w", encoding="utf-8") as f:
        for r in records:
            f.write(json.dumps(r, ensure_ascii=False) + "\n")
    (DATA / "stop_tokens.txt").write_text("\n".join(sorted(set(STOP_TOKENS))) + "\n",
                                          encoding="utf-8")
    print(f"{len(sentences)} sentences, {len(records)} senses")


if __name__ == "__main__":
    main()
