#!/usr/bin/env python3
"""Generate the bundled verb inflection table (data/inflections.tsv).

Irregular verbs are listed explicitly; prefixed irregulars inherit their
base's forms. Regular lemmas run through the same regular-morphology rules
the runtime fallback uses, with an explicit final-consonant-doubling list
for stress patterns the rules cannot know.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from roleq.grammar import regular_inflections  # noqa: E402

# stem: (past, past_participle[, present3sg, present_participle])
IRREGULAR = {
    "be": ("was", "been", "is", "being"),
    "have": ("had", "had", "has", "having"),
    "do": ("did", "done"),
    "go": ("went", "gone"),
    "arise": ("arose", "arisen"),
    "awake": ("awoke", "awoken"),
    "bear": ("bore", "borne"),
    "beat": ("beat", "beaten"),
    "become": ("became", "become"),
    "begin": ("began", "begun"),
    "bend": ("bent", "bent"),
    "bet": ("bet", "bet"),
    "bid": ("bid", "bid"),
    "bind": ("bound", "bound"),
    "bite": ("bit", "bitten"),
    "bleed": ("bled", "bled"),
    "blow": ("blew", "blown"),
    "break": ("broke", "broken"),
    "breed": ("bred", "bred"),
    "bring": ("brought", "brought"),
    "broadcast": ("broadcast", "broadcast"),
    "build": ("built", "built"),
    "burst": ("burst", "burst"),
    "buy": ("bought", "bought"),
    "cast": ("cast", "cast"),
    "catch": ("caught", "caught"),
    "choose": ("chose", "chosen"),
    "cling": ("clung", "clung"),
    "come": ("came", "come"),
    "cost": ("cost", "cost"),
    "creep": ("crept", "crept"),
    "cut": ("cut", "cut"),
    "deal": ("dealt", "dealt"),
    "dig": ("dug", "dug"),
    "draw": ("drew", "drawn"),
    "dream": ("dreamed", "dreamed"),
    "drink": ("drank", "drunk"),
    "drive": ("drove", "driven"),
    "eat": ("ate", "eaten"),
    "fall": ("fell", "fallen"),
    "feed": ("fed", "fed"),
    "feel": ("felt", "felt"),
    "fight": ("fought", "fought"),
    "find": ("found", "found"),
    "flee": ("fled", "fled"),
    "fling": ("flung", "flung"),
    "fly": ("flew", "flown"),
    "forbid": ("forbade", "forbidden"),
    "forget": ("forgot", "forgotten"),
    "forgive": ("forgave", "forgiven"),
    "forsake": ("forsook", "forsaken"),
    "freeze": ("froze", "frozen"),
    "get": ("got", "gotten"),
    "give": ("gave", "given"),
    "grind": ("ground", "ground"),
    "grow": ("grew", "grown"),
    "hang": ("hung", "hung"),
    "hear": ("heard", "heard"),
    "hide": ("hid", "hidden"),
    "hit": ("hit", "hit"),
    "hold": ("held", "held"),
    "hurt": ("hurt", "hurt"),
    "keep": ("kept", "kept"),
    "kneel": ("knelt", "knelt"),
    "know": ("knew", "known"),
    "lay": ("laid", "laid"),
    "lead": ("led", "led"),
    "leave": ("left", "left"),
    "lend": ("lent", "lent"),
    "let": ("let", "let"),
    "lie": ("lay", "lain"),
    "light": ("lit", "lit"),
    "lose": ("lost", "lost"),
    "make": ("made", "made"),
    "mean": ("meant", "meant"),
    "meet": ("met", "met"),
    "pay": ("paid", "paid"),
    "prove": ("proved", "proven"),
    "put": ("put", "put"),
    "quit": ("quit", "quit"),
    "read": ("read", "read"),
    "ride": ("rode", "ridden"),
    "ring": ("rang", "rung"),
    "rise": ("rose", "risen"),
    "run": ("ran", "run"),
    "say": ("said", "said"),
    "see": ("saw", "seen"),
    "seek": ("sought", "sought"),
    "sell": ("sold", "sold"),
    "send": ("sent", "sent"),
    "set": ("set", "set"),
    "sew": ("sewed", "sewn"),
    "shake": ("shook", "shaken"),
    "shed": ("shed", "shed"),
    "shine": ("shone", "shone"),
    "shoot": ("shot", "shot"),
    "show": ("showed", "shown"),
    "shrink": ("shrank", "shrunk"),
    "shut": ("shut", "shut"),
    "sing": ("sang", "sung"),
    "sink": ("sank", "sunk"),
    "sit": ("sat", "sat"),
    "slay": ("slew", "slain"),
    "sleep": ("slept", "slept"),
    "slide": ("slid", "slid"),
    "sling": ("slung", "slung"),
    "sneak": ("snuck", "snuck"),
    "speak": ("spoke", "spoken"),
    "speed": ("sped", "sped"),
    "spend": ("spent", "spent"),
    "spin": ("spun", "spun"),
    "spit": ("spat", "spat"),
    "split": ("split", "split"),
    "spread": ("spread", "spread"),
    "spring": ("sprang", "sprung"),
    "stand": ("stood", "stood"),
    "steal": ("stole", "stolen"),
    "stick": ("stuck", "stuck"),
    "sting": ("stung", "stung"),
    "stink": ("stank", "stunk"),
    "stride": ("strode", "stridden"),
    "strike": ("struck", "struck"),
    "string": ("strung", "strung"),
    "strive": ("strove", "striven"),
    "swear": ("swore", "sworn"),
    "sweep": ("swept", "swept"),
    "swell": ("swelled", "swollen"),
    "swim": ("swam", "swum"),
    "swing": ("swung", "swung"),
    "take": ("took", "taken"),
    "teach": ("taught", "taught"),
    "tear": ("tore", "torn"),
    "tell": ("told", "told"),
    "think": ("thought", "thought"),
    "throw": ("threw", "thrown"),
    "thrust": ("thrust", "thrust"),
    "tread": ("trod", "trodden"),
    "wake": ("woke", "woken"),
    "wear": ("wore", "worn"),
    "weave": ("wove", "woven"),
    "weep": ("wept", "wept"),
    "win": ("won", "won"),
    "wind": ("wound", "wound"),
    "wring": ("wrung", "wrung"),
    "write": ("wrote", "written"),
}

# Prefixed verbs that conjugate like their irregular base.
PREFIXED_IRREGULAR = [
    ("re", "write"), ("re", "build"), ("re", "think"), ("re", "sell"),
    ("re", "pay"), ("re", "tell"), ("re", "run"), ("re", "set"),
    ("re", "make"), ("re", "take"), ("re", "read"), ("re", "wind"),
    ("re", "draw"), ("re", "grow"), ("re", "bind"), ("re", "do"),
    ("over", "come"), ("over", "take"), ("over", "hear"), ("over", "throw"),
    ("over", "run"), ("over", "see"), ("over", "spend"), ("over", "eat"),
    ("over", "feed"), ("over", "ride"), ("over", "sleep"), ("over", "draw"),
    ("under", "stand"), ("under", "go"), ("under", "take"), ("under", "write"),
    ("under", "cut"), ("under", "pay"),
    ("out", "do"), ("out", "grow"), ("out", "run"), ("out", "sell"),
    ("out", "spend"), ("out", "bid"),
    ("mis", "take"), ("mis", "lead"), ("mis", "read"), ("mis", "understand"),
    ("mis", "spend"), ("mis", "hear"),
    ("un", "do"), ("un", "wind"), ("un", "bind"),
    ("with", "draw"), ("with", "hold"), ("with", "stand"),
    ("up", "set"), ("up", "hold"), ("off", "set"),
    ("fore", "see"), ("fore", "tell"), ("fore", "go"),
    ("be", "hold"), ("be", "fall"), ("part", "take"),
]

# Regular lemmas where the past/participle/gerund double the final
# consonant despite having more than one syllable (stress on the last).
DOUBLE_FINAL = """
abet acquit admit allot annul commit compel confer control debug defer
deter dispel distil embed emit enrol equip excel expel extol forbid format
impel incur infer instil kidnap occur omit outfit outwit patrol
permit prefer program propel rebel recap recur refer refit regret remit
repel submit transfer transmit
""".split()

REGULAR = """
abandon abate abduct abide abolish absorb abstain abuse accelerate accent
accept access acclaim accommodate accompany accomplish accord account
accumulate accuse ache achieve acknowledge acquire act activate adapt add
address adhere adjust administer admire adopt adore adorn advance advertise
advise advocate affect affirm afford age agree aid aim alarm alert alienate
align allege alleviate allocate allow allude alter alternate amaze amend
amount amplify amuse analyze anchor anger angle announce annoy answer
anticipate apologize appeal appear applaud apply appoint appraise appreciate
approach approve approximate arch argue arm arrange arrest arrive articulate
ascend ascribe ask aspire assault assemble assert assess assign assist
associate assume assure astonish attach attack attain attempt attend attract
attribute auction audit augment authorize automate avert avoid await awaken
award back bake balance balk ban bang bank bar bargain bark base bash bat
bathe batter battle beam beg behave belong benefit betray bicker bike bill
blame blast blaze bleach blend bless blink block bloom blossom bluff blur
blush board boast boil bolster bolt bomb bond book boom boost border bother
bounce bound bow bowl box brace brag brainstorm brake branch brand brave
breathe brew bribe bridge brief brighten broaden broil brush buckle budget
buffer bug bulge bully bump bundle burn burrow bury bus bust bustle butter
button buzz cable calculate calibrate call calm camp campaign cancel
capitalize capture care caress carry carve cash cast categorize cater cause
caution cease celebrate cement censor center certify chain chair challenge
champion chance change channel chant characterize charge chart charter chase
chat cheat check cheer cherish chew chill chip choke chop chronicle churn
circle circulate cite claim clamp clarify clash clasp classify clean cleanse
clear click climb clinch clip cloak clock clone close clothe cloud club
cluster clutch coach coast coat coax code coexist coincide collaborate
collapse collect collide colonize color comb combat combine comfort command
commemorate commence commend comment commission communicate commute compare
compensate compete compile complain complement complete complicate
compliment comply compose compound comprehend compress comprise compromise
compute conceal concede conceive concentrate concern conclude concoct
condemn condense condition conduct confess confide configure confine
confirm confiscate conform confront confuse congratulate connect conquer
consent conserve consider consist console consolidate conspire constitute
constrain construct construe consult consume contact contain contaminate
contemplate contend contest continue contract contradict contrast
contribute convene converge converse convert convey convict convince cook
cool cooperate coordinate cope copy correct correlate correspond corrupt
cough counsel count counter couple court cover covet crack craft cram crash
crave crawl create credit cringe cripple criticize crop cross crouch
crowd crown cruise crumble crunch crush cry cuddle cue cultivate curb cure
curl curse curve cushion customize cycle damage dampen dance dangle dare
darken dash date dazzle deactivate deal debate debut decay deceive decide
declare decline decode decompose decorate decrease dedicate deduce deduct
deem deepen default defeat defend define deflate deflect defraud defy
degrade delay delegate delete deliberate delight deliver demand demolish
demonstrate denote denounce deny depart depend depict deplete deploy deport
depose deposit depress deprive derail derive descend describe desert deserve
design designate desire despair despise destroy detail detain detect
deteriorate determine detest devastate develop deviate devise devote devour
diagnose dictate die differ differentiate digest dignify dilute dim diminish
dine dip direct disagree disappear disappoint disapprove discard discern
discharge discipline disclose disconnect discount discourage discover
discredit discriminate discuss disguise disgust dislike dismantle dismiss
disobey disperse displace display displease dispose dispute disregard
disrupt dissolve distance distinguish distort distract distribute disturb
ditch dive divert divide divorce document dodge dominate donate doom dot
double doubt downgrade download downplay doze draft drag drain dramatize
drape dread drench dress drift drill drip drop drown drug dry dub duck dump
dwell dye earn ease echo eclipse edge edit educate eject elaborate elect
elevate eliminate elude email embark embarrass embody embrace emerge
emphasize employ empower empty emulate enable enact enclose encode
encompass encounter encourage end endanger endorse endure energize enforce
engage engineer enhance enjoy enlarge enlighten enlist enrage enrich
enroll ensue ensure entail enter entertain enthuse entice entitle entrust
envision envy equal equate erase erect erode erupt escalate escape escort
establish esteem estimate evacuate evade evaluate evaporate evoke evolve
exaggerate examine exceed excel except exchange excite exclaim exclude
excuse execute exempt exercise exert exhaust exhibit exist exit expand
expect expedite experience experiment expire explain explode exploit
explore export expose express extend extinguish extract eye fabricate face
facilitate fade fail faint fake falter fan fancy fare farm fascinate
fashion fasten father fathom favor fax fear feast feature fence fend ferry
fetch field file fill film filter finance find fine finish fire firm fish
fit fix fizzle flag flame flank flap flare flash flatten flatter flaunt
flavor flick flinch flip flirt float flock flood flop flourish flow flower
fluctuate flush flutter foam focus fold follow fool forbid force forecast
foreclose forfeit forge form formalize formulate fortify forward foster
foul found fracture frame free freshen frighten fringe frown fry fuel
fulfill fumble function fund funnel furnish fuse fuss gain gamble garden
gasp gather gauge gaze gear generalize generate gesture giggle glance glare
glean glide glimpse glow glue gnaw govern grab grace grade graduate grant
grapple grasp grate gravitate graze grease greet grieve grill grimace grin
grip groan groom groove gross group grumble guarantee guard guess guide
gut hail halt hammer hamper hand handle harass harbor harden harm harness
harvest hasten hatch hate haul haunt head heal heap heat heave hedge heed
help herald herd hesitate highlight hijack hike hinder hinge hint hire
hiss hoard hoist honor hoot hop hope host house hover howl huddle hug hum
humble humiliate hunt hurl hurry hush hypothesize identify idle ignite
ignore illuminate illustrate imagine imitate immerse immigrate impact
implant implement implicate imply import impose impress imprint imprison
improve improvise inch incline include incorporate increase incriminate
indicate indict induce indulge infect infer infest inflate inflict
influence inform infringe infuse inhabit inhale inherit inhibit initiate
inject injure innovate inquire insert insist inspect inspire install
instruct insulate insult insure integrate intend intensify interact
intercept interest interfere interject interpret interrogate interrupt
intersect intervene interview intimidate intrigue introduce intrude
inundate invade invent invest investigate invite invoke involve iron
isolate issue itch jam jeopardize jerk jest jog join joke jolt journey
judge juggle jump justify keen key kick kill kiss knit knock knot label
labor lack lag lament land languish lapse lash last latch laugh launch
launder lavish layer leak lean leap learn lease lecture legalize legislate
legitimize lengthen lessen level leverage liberate license lick lift
lighten like liken limit limp line linger link list listen litigate
litter live load loan lobby localize locate lock lodge log long look loom
loosen loot lounge love lower lug lull lunge lurch lure lurk maintain
manage mandate maneuver manifest manipulate manufacture map march
marinate mark market marry marvel mask mass master match mate
materialize matter mature maximize measure mediate meditate melt mend
mention mentor merge merit mesh mess migrate milk mimic mind mine mingle
minimize mint mirror miss mistrust misuse mix moan mobilize mock model
moderate modernize modify moisten mold monitor mop motion motivate mount
mourn mouth move mow muddle muffle mull multiply mumble murder murmur
muse mushroom muster mutate mute mutter name narrate narrow navigate near
neglect negotiate nest net neutralize nibble nickname nod nominate
normalize note notice notify nourish nudge number nurse nurture obey
object oblige obscure observe obsess obstruct obtain occupy offend offer
officiate oil ooze open operate oppose opt optimize orbit orchestrate
order organize orient originate oust outline outnumber outpace outperform
outrage outsource outweigh overcompensate overlap overload overlook
overpower overreact overrule overshadow overstate overturn overuse
overwhelm overwork owe own oxidize pace pacify pack package pad paint
pair pan panic parade paralyze paraphrase pardon park parse part
participate partition partner pass paste pat patch patent pause pave paw
peak pedal peck peek peel peer penalize penetrate pension perceive perch
perfect perform perish permeate perpetuate persecute persevere persist
personalize persuade pertain pervade petition phase phone photograph
phrase pick picket picture pile pilot pin pinch pinpoint pioneer pipe
pitch pity pivot place plague plan plant play plead please pledge plot
plow pluck plug plummet plunge pocket point poise poison poke police
polish poll pollute ponder pool pop popularize populate pose position
possess post postpone pounce pound pour practice praise prance pray
preach precede precipitate preclude predict preempt preface premiere
prepare prescribe present preserve preside press pressure presume pretend
prevail prevent preview price pride print prioritize probe proceed
process proclaim procure produce profess profile profit progress
prohibit project proliferate prolong promise promote prompt pronounce
proof propagate propose prosecute prosper protect protest prove provide
provoke prune pry publicize publish pull pulse pump punch punctuate
punish purchase purge purify pursue push pause qualify quantify quarrel
quash quell quench query question queue quicken quiet quote race
rack radiate raid rain raise rake rally ramble ramp ranch range rank
ransack rant rate ratify ration rationalize rattle ravage rave reach
react realize reap rear reason reassure recall recede receive recite
reckon reclaim recognize recommend reconcile reconsider reconstruct
record recount recover recruit rectify recycle redeem reduce refer
referee refine reflect reform refrain refresh refuel refund refuse
refute regain regard register regress regulate rehabilitate rehearse
reign reimburse rein reinforce reinstate reiterate reject rejoice
rejuvenate relate relax relay release relent relieve relinquish relish
relocate rely remain remark remedy remember remind reminisce remove
render renew renounce renovate rent reorganize repair repeat replace
replenish replicate reply report represent repress reprimand reproach
reproduce request require rescue research resemble resent reserve reside
resign resist resolve resonate respect respond rest restore restrain
restrict result resume retain retaliate retire retort retreat retrieve
return reunite reveal revel reverse revert review revise revive revoke
revolt revolutionize revolve reward rhyme rid riddle ridicule rig rinse
riot rip ripen ripple risk rival roam roar roast rob rock roll romp roof
room root rope rot rotate round rouse rout route rub ruin rule rumble
rush rust sabotage sack sacrifice sadden saddle sail salute salvage
sample sanction sand sandwich satisfy saturate save savor saw scale scan
scar scare scatter scavenge schedule scheme school scoff scold scoop
scoot scope score scorn scour scout scowl scramble scrap scrape scratch
scream screen screech script scroll scrub scrutinize scuffle sculpt seal
search season seat seclude secure sedate seduce seed seem seep segment
segregate seize select sense sentence separate serve service settle
sever shade shadow shame shape share sharpen shatter shave shelter
shepherd shield shift shimmer ship shiver shock shop shore shorten shout
shove shovel showcase shower shred shriek shrug shuffle shun shuttle shy
sidestep sideline sigh sign signal signify silence simmer simplify
simulate sin sip siphon situate size sizzle skate sketch skew ski skid
skim skip skirt slack slam slant slap slash slate slice slick slim slink
slip slit slow slump smash smear smell smile smoke smooth smother smuggle
snap snatch sniff snooze snore snorkel snort snow snub soak soar sob
sober socialize soften soil solicit solidify solve soothe sort sound
sour source space span spare spark sparkle spawn specialize specify
speculate spell spew spice spike spill spiral splash splatter splurge
spoil sponsor spot spotlight spout sprawl spray sprinkle sprint sprout
spur spy squabble squander square squash squat squeak squeeze squint
stabilize stack staff stage stagger stagnate stain stake stalk stall
stamp stampede staple star stare start startle starve stash state station
stay steam steer stem step sterilize stifle stimulate stipulate stir
stock stockpile stomp stop store storm stow straddle straighten strain
strand strangle strap stray streak stream streamline strengthen stress
stretch strip stroke stroll structure struggle strut study stuff stumble
stun stunt style subdue subject sublease submerge subordinate subscribe
subside subsidize substantiate substitute subtract succeed succumb suck
sue suffer suffice suffocate suggest suit summarize summon sunbathe
supervise supplement supply support suppose suppress surface surge
surmise surpass surprise surrender surround survey survive suspect
suspend sustain swallow swamp swap sway swerve swipe swirl switch swoop
symbolize sympathize synchronize synthesize systematize table tackle tag
tail tailor taint talk tally tame tamper tan tangle tank tap tape target
tarnish task taste tattoo taunt tax teem tease telephone televise temper
tempt tend terminate terrify test testify texture thank thaw theorize
thicken thin thirst thrash thread threaten thrill thrive throb throttle
thumb thump thwart tick tickle tidy tie tighten tilt time tinker tip
tiptoe tire title toast toil tolerate toll tone topple torment torture
toss total tote totter touch toughen tour tout tow towel tower toy trace
track trade trail train trample transcend transcribe transform transit
translate transpire transplant transport trap trash travel traverse
tremble trend trick trickle trigger trim trip triple triumph trot trouble
trudge trumpet trust try tuck tug tumble tune turn tutor tweak twist
type umpire uncover underestimate underline undermine underscore
understate unearth unfold unify unite unleash unload unlock unpack
unravel unveil update upgrade uplift upload urge use usher utilize utter
vacate vacation validate value vanish vanquish vary vault veer vent
venture verify vest veto vex vibrate view vindicate violate visit
visualize voice void volunteer vote vouch vow wade wager wail wait waive
walk wallow wander wane want ward warm warn warp warrant wash waste watch
water wave waver weaken wean weather wed weed weigh welcome weld whack
wheel whine whip whirl whisk whisper whistle widen wield wiggle will
wilt wince wink wipe wire wish withdraw wither witness wobble wonder woo
work worry worsen worship wound wrap wreck wrestle wriggle wrinkle
xerox yank yearn yell yield zap zero zigzag zip zoom
""".split()

PREFIX_REGULAR = [
    ("re", """activate adjust affirm align allocate appear apply appoint
    arrange assemble assert assess assign attach boot brand calculate
    calibrate capture charge check claim classify collect combine compile
    configure confirm connect consider construct convene count couple
    create deploy design dial direct discover distribute draft educate
    elect emerge enact enforce engage enlist enter establish evaluate
    examine export finance focus forge formulate frame fuel fund group
    heat house imagine import impose insert inspect install insure
    integrate interpret introduce invent invest invigorate issue join
    kindle label launch lease live load locate lodge marry measure merge
    model mold name negotiate number open order orient pack package paint
    phrase plan plant play position post price print process purchase
    purpose route schedule seal seat settle shape start state stock
    structure submit supply surface test title touch train try turn unite
    use validate value visit vitalize wire work"""),
    ("over", """achieve analyze bill book burden charge cook correct count
    estimate extend fill fish heat indulge inflate load pay play price
    produce react regulate report sample saturate sell shoot simplify
    state stretch supply tax train use value work"""),
    ("out", """class compete last live maneuver match number pace perform
    play produce rank reach score shine smart source vote weigh"""),
    ("mis", """align allocate apply behave calculate cast categorize cite
    classify communicate conduct configure construe count diagnose dial
    direct fire fit handle identify inform interpret judge label manage
    match name number place price pronounce quote remember report
    represent state time translate treat trust type use"""),
    ("un", """block bolt buckle bundle burden button chain clog cork
    couple cover dress earth fasten fold freeze hook latch leash load
    lock mask mute pack pin plug ravel roll saddle screw seal seat settle
    tangle tie veil wrap zip"""),
    ("under", """achieve bid charge deliver estimate fund perform play
    report score sell serve state use utilize value"""),
    ("de", """activate bug camp centralize classify code colonize
    commission compose contaminate criminalize emphasize escalate face
    fame forest frost fund grade hydrate ice legitimize louse magnetize
    mobilize mystify nationalize odorize personalize politicize populate
    pressurize rail regulate sensitize stabilize throne tox value
    vitalize"""),
    ("dis", """able advantage agree allow appear applaud arm array
    assemble associate band believe burden card charge claim color
    comfort compose connect continue count courage credit embark empower
    enchant enfranchise engage entangle establish favor figure honor
    illusion incline infect inherit integrate interest invite lodge
    mantle member mount obey orient own place please prove qualify
    regard respect robe rupt satisfy semble serve solve tend tort tract
    tress trust unite"""),
    ("pre", """arrange assemble authorize book calculate clean configure
    cook date determine dispose empt fabricate figure game heat judge
    load occupy order pack package pay plan position process program
    qualify record register screen select sell set shrink soak sort
    test treat view warm wash"""),
    ("co", """author chair create design direct edit evolve exist found
    host invest locate manage mingle occur operate organize own produce
    sign sponsor star write"""),
]


def main():
    out_path = Path(__file__).resolve().parents[1] / "src" / "roleq" / "data" / "inflections.tsv"
    out_path.parent.mkdir(parents=True, exist_ok=True)
    rows = {}

    def add(stem, past, pp, third=None, ing=None):
        base = regular_inflections(stem)
        rows[stem] = (stem, third or base.present3sg, past, pp, ing or base.present_participle)

    for stem, forms in IRREGULAR.items():
        add(stem, *forms)
    for prefix, base in PREFIXED_IRREGULAR:
        if base in IRREGULAR:
            past, pp, *rest = IRREGULAR[base]
            derived = [prefix + f for f in (past, pp)]
            extra = [prefix + f for f in rest]
            add(prefix + base, *derived, *extra)
        else:
            src = rows[base]
            rows[prefix + base] = tuple(prefix + f for f in src)
    for lemma in DOUBLE_FINAL:
        if lemma in IRREGULAR:
            continue
        doubled = lemma + lemma[-1]
        add(lemma, doubled + "ed", doubled + "ed", ing=doubled + "ing")
    for lemma in REGULAR:
        if lemma in rows:
            continue
        infl = regular_inflections(lemma)
        rows[lemma] = (infl.stem, infl.present3sg, infl.past,
                       infl.past_participle, infl.present_participle)
    for prefix, words in PREFIX_REGULAR:
        for word in words.split():
            lemma = prefix + word
            if lemma in rows:
                continue
            if word in rows:
                src = rows[word]
                rows[lemma] = tuple(prefix + f for f in src)
            else:
                infl = regular_inflections(lemma)
                rows[lemma] = (infl.stem, infl.present3sg, infl.past,
                               infl.past_participle, infl.present_participle)

    with open(out_path, "w", encoding="utf-8") as handle:
        handle.write("# stem\tpresent3sg\tpast\tpast_participle\tpresent_participle\n")
        for stem in sorted(rows):
            handle.write("\t".join(rows[stem]) + "\n")
    print(f"wrote {len(rows)} verbs to {out_path}")


if __name__ == "__main__":
    main()
