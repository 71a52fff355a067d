"""Word lists backing the heuristic POS tagger and the lemmatizer.

These are deliberately small, frozen sets: enough coverage for pre-tagging
everyday English before the external annotator runs, not a dictionary.
"""

DETERMINERS = frozenset("""
the a an this that these those each every either neither some any no all both
another such
""".split())

ADPOSITIONS = frozenset("""
aboard about above across after against along amid among around at before
behind below beneath beside besides between beyond by despite during except
for from in inside into near of off on onto out outside over past per since
through throughout till to toward towards under underneath until unto up upon
via with within without
""".split())

# "be" forms and modals are always auxiliaries here; have/do forms are
# disambiguated by context in the tagger.
AUX_ALWAYS = frozenset("""
am is are was were be been being will would shall should can could may might
must ought
""".split())

AUX_HAVE_DO = frozenset("have has had do does did".split())

CCONJS = frozenset("and or but nor".split())

SCONJS = frozenset("""
although because if once since so than that though unless until when whenever
whereas while whether
""".split())

PRONOUNS = frozenset("""
i you he she it we they me him her us them myself yourself himself herself
itself ourselves themselves mine yours hers ours theirs my your his its our
their who whom whose what which something someone somebody anything anyone
anybody nothing nobody everything everyone everybody one
""".split())

PARTICLES = frozenset(["not", "n't", "'s"])

INTERJECTIONS = frozenset("""
ah aha eh hello hey hi hmm huh oh okay oops ouch please uh uhhuh um wow yeah
yes yep
""".split())

NUMBER_WORDS = frozenset("""
zero one two three four five six seven eight nine ten eleven twelve thirteen
fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty
fifty sixty seventy eighty ninety hundred thousand million billion
""".split())

ADVERBS = frozenset("""
again ago almost already also always anywhere away back even ever everywhere
far fast forever hard here how just late later maybe more most much never
now nowhere often once only quite rather slow so sometimes somewhere soon
still then there today together tomorrow tonight too twice very well when
where why yesterday yet
""".split())

ADJECTIVES = frozenset("""
angry bad beautiful big black blue bright broken busy calm careful cheap
clean clear cold cool dark deep dirty dry dull early easy empty expensive
fair fast fine flat fresh full funny good great green grey happy hard heavy
high hot huge hungry kind large last late lazy light little long loud low
narrow new nice noisy old open orange pink poor pretty proud purple quick
quiet ready red rich right ripe rough round sad safe sharp short shy sick
silly simple slow small smooth soft sore sorry sour steep sticky straight
strange strong sweet tall thick thin tight tiny tired warm weak wet white
whole wide wild wrong yellow young
""".split())

PROPER_NAMES = frozenset("""
anna john mary tom ben sam max emma sarah peter paul kim lee alex pat dana
london paris
""".split())

# Base forms only; inflections resolve through lemma candidates.
VERB_BASES = frozenset("""
add answer arrive ask babble bake bang bark bawl beat become begin believe
belong bend bind bite blacken bleach bleed blink bloom blow boil bounce bow
braid braise break breathe brighten bring bronze brush bubble buckle build
bump burn burst bury button buy cackle call canter carry carve catch chant
chase chat chatter chew chill choke chop chuckle churn clap claw clean clear
climb close coat collapse comb come cook cool cost cough cover crack cram
crawl creep croak crumble crush cry cut dab dance dart dash decay deepen
defrost demolish deserve destroy dice die dig dim dip dissolve dive do doubt
drag drain draw dream dress dribble drill drink drip drive drizzle drop drown
drum dry dump dust eat empty endanger enter envy erase evaporate exercise
explode extinguish fade fall fear feed feel fight fill find finish fit fix
flap flatten flutter flick float flood fly fold follow fracture freeze
frolic fry gallop gargle gasp get giggle give glide glue gnaw go gobble grab
grate grill grin groan growl grunt guillotine gulp gurgle hammer hang happen
harden harvest hate heal hear heat help hide hike hit hobble hold hoot hop
howl hug hum hurry hurt ignite improve involve iron jiggle jog jostle jump
keep kick kill kiss knead kneel knit knock know lack laugh lay lead leap
learn leave lengthen let lick lie lift light like limp listen live load lock
look lope lose love lurch make march massage matter mean meander melt mend
meow mix moan mop mow mumble mutter nail narrow need neigh nibble nod open
owe own pack paddle paint park pat paw peck pedal peel perish pick pile
plant play plod poach poke polish possess pound pour pounce prance prefer
press prowl pry pull pummel punch purify purr push put quit quiver rake
ramble rattle reach read redden remove resemble ride rinse rip ripen rise
roam roar roast rock roll romp rot row rub run rust rustle salute saunter
saute sauté saw say scamper scatter scoop scoot scrape scratch scream screw
scribble scrub scurry seal see sell send set sew shake share sharpen shatter
shave shine shiver shoot shorten shout shovel shred shrink shrug shuffle
shut simmer sing sink sip sit sizzle skate sketch skin skip slap sleep slice
slide slither slosh smack smash smear smell smile sniff snore snort sob
soften solidify somersault sow speak sparkle spill spin splash splatter
split sponge spray spread sprinkle sprint squeak squeal squeeze stack
stagger stain stamp stand staple starch start stay steal steam sterilize
stew stick sting stir stitch stomp stop straighten strangle stretch strike
stroll strum strut study stuff stutter swagger sweep swim swing swirl take
talk tango tap taste teach tear tell thaw think throw thump tickle tie
tighten tiptoe toast toddle topple toss totter touch tremble trim trot
trudge try tug turn twirl twist understand use vacuum vanish varnish waddle
wade wag wait wake walk waltz wander want warm wash watch wave wax weaken
wear weave weep wheeze whimper whine whisk whisper whiten widen wiggle wilt
win wink wipe wish wither wobble work worsen wrap wriggle write yell yodel
zigzag zip
""".split())

NOUN_BASES = frozenset("""
afternoon air animal answer apple arm baby back bag ball balloon banana
basket bath beach bear bed bell bike bird biscuit blanket block boat book
boot bottle bowl box boy bread breakfast brush bucket bug bus butter button
cake car card carpet carrot cat chair cheese chef chicken child children
city clock cloth clothes coat coffee cookie corner couch cow crayon cup day
desk dinner dish dog doggie doll door dress dryer duck ear egg evening eye
face fall farm farmer fence field fire fish floor flower foot fork fox
friend frog game garden gate gift girl glass glove goat grass ground hair
hammer hand hat head hill home horse hour house ice jacket juice key kid
kitchen kite knee knife lady lake lamp leaf leg letter light lion lunch man
market men milk minute mirror money monkey month moon morning mother mouse
mouth movie mud music nail name night nose notebook oven page paint pan
pants paper park party pen pencil people person phone photo piano picture
pie pig pillow plant plate playground pond pony pool pot potato president
pumpkin puppy purse rabbit rain river road rock roof room rope rug salad
sand sandwich school scissors sea seed sheep shelf shirt shoe shop shovel
side sink sister sky sled smoke snow soap sock sofa song soup spider spoon
spring star stick stone store story stove street sugar summer sun swing
table tea teacher team telephone thing ticket tiger time towel town toy
train tree truck vase wagon wall watch water week wind window winter wood
word yard year zoo
""".split())
