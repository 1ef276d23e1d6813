// Copyright 2026 The stylenlg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated word list; one adjective per whitespace-separated entry.

#include <string_view>

namespace stylenlg {

extern const std::string_view kAdjectiveLexicon;
const std::string_view kAdjectiveLexicon = R"(
able absent absolute abstract absurd abundant abysmal academic acceptable
accessible accidental accommodating accurate acidic active actual acute
adamant adaptable adequate adjacent administrative adorable adult advanced
adventurous adverse aesthetic affectionate affordable afraid aggressive agile
agreeable airy alcoholic alert alive alleged alone aloof alternative
amazing ambitious amiable ample amused amusing ancient angry animated annoyed
annoying annual anonymous anxious appalling apparent appealing appropriate
approximate arbitrary architectural arctic ardent arid aromatic arrogant
artificial artistic ashamed asleep assertive astonishing athletic atomic
atrocious attentive attractive audible authentic automatic available average
awake award-winning aware awesome awful awkward bad baked bald bare basic
beachfront beautiful beloved beneficial best better big bitter bizarre black
bland blank bleak blessed blind blond bloody blue blunt bold bored boring
bossy bouncy boutique brave breathtaking breezy brief bright brilliant brisk
broad broken brown brutal bubbly budget bulky bumpy bustling busy buttery
cajun calm capable careful careless casual cautious central certain
charismatic charming cheap cheerful cheesy chemical chic chief chilly chinese
chosen chubby civil classic classical classy clean clear clever close closed
cloudy clumsy coarse cold colorful colossal comfortable commercial common
compact comparable competent competitive complete complex complicated
complimentary comprehensive concerned concise confident confused conscious
conservative considerable consistent constant contemporary continuous
convenient conventional cool cooperative corporate correct costly cosy
countless courageous cozy cranky crazy creamy creative credible crisp crispy
critical crowded crucial crude cruel crummy crunchy cuban culinary cultural
curious curly current cute daily damp dangerous dark dead deadly deaf dear
decent decisive decorative deep defective defiant definite delectable
delicate delicious delighted delightful dense dependent deplorable depressing
desirable desperate detailed determined dietary different difficult digital
diligent dim dining dire direct dirty disabled disappointing dismal distant
distinct diverse divine dizzy domestic dominant double doubtful downtown drab
dramatic dreadful dreary dry dull dusty dynamic eager early earnest
eastern easy economic economical ecstatic edible educational effective
efficient elaborate elastic elated elderly electric electrical electronic
elegant elementary eligible elite embarrassed emotional empty encouraging
endless energetic enjoyable enormous entire environmental equal equivalent
essential eternal ethical ethnic euphoric everyday evident evil exact
excellent exceptional excessive excited exciting exclusive exemplary exotic
expensive experienced experimental expert explicit exquisite extensive
external extra extraordinary extreme fabulous factual faint fair faithful
false familiar family-friendly famous fancy fantastic far fascinating
fashionable fast fat fatal favorable favorite fearful fearless feasible
federal feeble female fertile festive fierce fiery filthy final financial
fine firm first fit fixed flat flavorful flawless flexible fluent fluffy fond
foolish foreign formal former fortunate fragile frail frank free frequent
fresh fried friendly frightened frightening frozen fruitful frustrating full
fun functional funny furious fuzzy general generous gentle genuine ghastly
giant gifted gigantic glad glamorous gleeful gloomy glorious glossy
gluten-free golden good gorgeous gourmet graceful gracious gradual grand
grateful grave gray great greedy greek green grilled grim gross gruesome
grumpy guilty half handsome handy happy hard harmful harmless harsh hasty
healthy heartfelt hearty heavenly heavy helpful helpless hidden hideous high
hilarious historic historical hollow holy homely homemade homey honest
hopeful hopeless horrendous horrible horrid hospitable hostile hot huge
humble humid humorous hungry hurt hysterical icy ideal identical idle
ignorant ill illegal imaginary immediate immense imminent impatient
impeccable imperfect important impossible impressive improper inadequate
incredible independent indian indirect individual indoor industrial
inevitable inexpensive inferior infinite influential informal initial inner
innocent innovative inspiring instant intact intellectual intelligent intense
intensive interested interesting interior internal international intimate
intricate invisible inviting irrelevant isolated italian itchy japanese
jealous joint jolly jovial joyful joyous jubilant juicy junior keen 
kind knowledgeable known korean kosher lakeside lame large last late lavish
lazy leading lean legal legendary legitimate lengthy lesser liberal
light lighthearted likely limited linear liquid little lively living
local logical lone lonely long loose lost loud lousy lovable lovely loving
low loyal lucky lumpy luxurious mad magic magical magnificent main major male
mandatory manual marginal marine marvellous marvelous massive mature maximum
meaningful medical medieval mediocre mediterranean medium mellow memorable
mental mere messy metallic mexican mild military mindful minimal minimum
minor miraculous miserable mobile moderate modern modest moist monthly
moral mortal motionless mouthwatering muddy multiple mundane musical mutual
mysterious naive narrow nasty national native natural naughty nearby neat
necessary negative nervous neutral new nice nifty nightly noble noisy nominal
non-refundable non-smoking normal northern notable noted noteworthy novel
numerous nutritious obedient obese objective obscure obvious occasional
occupied odd offensive official old olympic open operational opposite
optimal optimistic optional oral orange ordinary organic original outdoor
outer outgoing outrageous outstanding overall overpriced overseas
overwhelming painful pale panoramic parallel partial particular
passionate passive pathetic patient peaceful peculiar perfect perky
permanent persistent personal persuasive pessimistic petite physical
picturesque pink plain plausible playful pleasant pleased pleasing
pleasurable plentiful plump poetic polished polite political poor
popular portable posh positive possible potential powerful practical precious
precise pregnant premium prepared pretty previous pricey pricy
primary prime primitive principal prior pristine private probable productive
professional profitable profound progressive prominent promising proper
prospective protective proud prudent public pure purple quaint qualified
quick quiet quirky radiant radical random rapid rare rational raw ready real
realistic reasonable recent reckless red refreshing refundable regional
regrettable regular rejuvenating related relaxed relaxing relevant reliable
reluctant remarkable remote renovated renowned repulsive required resident
resilient respectable respectful responsible restless rewarding rich
ridiculous rigid ripe risky robust romantic rooftop rotten rough round
royal rude rural rustic sacred sad safe salty sandy satisfied satisfying
savory scared scary scenic scientific scrumptious seasonal secluded secondary
secret secure selfish senior sensational sensible sensitive separate
serendipitous serene serious severe sexual shabby shaggy shallow sharp shiny
shocking shoddy short shy sick significant silent silky silly similar simple
sincere single skilled skinny sleepy slender slight slim slippery sloppy slow
small smart smelly smoky smooth snug sober social soft solar sole solid
soothing sophisticated sore sorrowful sorry sour southern spacious
spare sparkling special specific spectacular speedy spicy spirited spiritual
splendid spontaneous sporty spotless stable stale standard steady steep
stellar sticky stiff stingy straight strange strategic stressful strict
striking strong stubborn stunning stupendous stupid sturdy subpar subsequent
substantial subtle successful succulent sudden sufficient suitable sumptuous
sunny super superb superior superlative supportive supreme sure surprised
surprising suspicious sweet swift symbolic sympathetic tacky talented tall
tame tan tangible tangy tasteful tasty technical tedious temporary tender
tense terrible terrific thai thankful theoretical thick thin thirsty thorough
thoughtful thrilling thriving tidy tight timely tiny tired top total tough
touristy toxic traditional tragic tranquil transparent tremendous trendy
tricky triumphant trivial tropical true trustworthy typical ugly ultimate
unable unacceptable unaware unbearable uncertain uncomfortable unconscious
underground unexpected unfair unfamiliar unforgettable unfortunate unhappy
uniform unique united universal unknown unlikely unnecessary unpleasant
unreliable unsatisfactory unusual upbeat uplifting upper upscale upset
upsetting urban urgent useful useless usual vacant vague valid valuable
varied various vast vegan vegetarian verbal vertical vibrant vicious
victorious vietnamese vigilant vigorous vintage violent virtual visible
visual vital vivacious vivid vocal vulnerable walkable warm wary waterfront
weak wealthy weary weekly weird welcome welcoming western wet whimsical
whole wicked wide wild willing wise witty wonderful wondrous wooden worldwide
worried worse worst worthwhile worthy wretched wrong yearly yellow young
youthful zany zealous zesty
)";

}  // namespace stylenlg
