#include "geomove/lexicon_data.hpp"

#include <array>

namespace geomove::lexicon {

namespace {

using sv = std::string_view;

// Movement verbs (lemmas).
constexpr std::array kMovementVerbs = {
    sv{"advance"},  sv{"aim"},        sv{"amble"},     sv{"angle"},      sv{"back"},     sv{"barrel"},
    sv{"beetle"},   sv{"belt"},       sv{"bez"},       sv{"bluster"},    sv{"bolt"},     sv{"bounce"},
    sv{"bound"},    sv{"bumble"},     sv{"canter"},    sv{"careen"},     sv{"career"},   sv{"charge"},
    sv{"crawl"},    sv{"creep"},      sv{"dance"},     sv{"dart"},       sv{"dash"},     sv{"dawdle"},
    sv{"dive"},     sv{"dodder"},     sv{"dogtrot"},   sv{"emerge"},     sv{"escape"},   sv{"file"},
    sv{"flee"},     sv{"flounce"},    sv{"flop"},      sv{"fly"},        sv{"footslog"}, sv{"forge"},
    sv{"gallop"},   sv{"gambol"},     sv{"glide"},     sv{"go"},         sv{"hare"},     sv{"hasten"},
    sv{"head"},     sv{"hie"},        sv{"hightail"},  sv{"hike"},       sv{"hop"},      sv{"hurtle"},
    sv{"issue"},    sv{"jog"},        sv{"jump"},      sv{"jaunt"},      sv{"journey"},  sv{"labour"},
    sv{"leap"},     sv{"leg"},        sv{"limp"},      sv{"lollop"},     sv{"lope"},     sv{"lunge"},
    sv{"march"},    sv{"meander"},    sv{"mooch"},     sv{"mosey"},      sv{"move"},     sv{"nip"},
    sv{"pace"},     sv{"pad"},        sv{"parade"},    sv{"patrol"},     sv{"patter"},   sv{"pass"},
    sv{"pelt"},     sv{"perambulate"}, sv{"plod"},     sv{"pootle"},     sv{"pop"},      sv{"potter"},
    sv{"pound"},    sv{"prance"},     sv{"progress"},  sv{"proceed"},    sv{"promenade"}, sv{"prowl"},
    sv{"race"},     sv{"ramble"},     sv{"regress"},   sv{"return"},     sv{"roam"},     sv{"roll"},
    sv{"rove"},     sv{"run"},        sv{"rush"},      sv{"sashay"},     sv{"saunter"},  sv{"scamper"},
    sv{"scarper"},  sv{"scoot"},      sv{"scud"},      sv{"scuff"},      sv{"scurry"},   sv{"scuttle"},
    sv{"seethe"},   sv{"shuffle"},    sv{"skedaddle"}, sv{"skip"},       sv{"skitter"},  sv{"slide"},
    sv{"slink"},    sv{"slip"},       sv{"slither"},   sv{"slope"},      sv{"sneak"},    sv{"speed"},
    sv{"split"},    sv{"sprint"},     sv{"stagger"},   sv{"stalk"},      sv{"stampede"}, sv{"steam"},
    sv{"step"},     sv{"streak"},     sv{"stride"},    sv{"stroll"},     sv{"strut"},    sv{"swagger"},
    sv{"sweep"},    sv{"tank"},       sv{"tiptoe"},    sv{"traipse"},    sv{"tramp"},    sv{"trample"},
    sv{"travel"},   sv{"tread"},      sv{"trek"},      sv{"trip"},       sv{"tromp"},    sv{"troop"},
    sv{"trot"},     sv{"trundle"},    sv{"tumble"},    sv{"undulate"},   sv{"waddle"},   sv{"walk"},
    sv{"wander"},   sv{"wend"},       sv{"whizz"},     sv{"wobble"},     sv{"zip"},
};

constexpr std::array kMovementAdjectives = {
    sv{"slow"},  sv{"slight"},      sv{"moderate"},    sv{"gradual"},  sv{"steady"},   sv{"quick"},
    sv{"rapid"}, sv{"significant"}, sv{"sharp"},       sv{"substantial"}, sv{"dramatic"}, sv{"sudden"},
};

constexpr std::array kMovementAdverbs = {
    sv{"dramatically"}, sv{"considerably"}, sv{"significantly"}, sv{"substantially"}, sv{"sharply"},
    sv{"moderately"},   sv{"slightly"},     sv{"rapidly"},       sv{"quickly"},       sv{"suddenly"},
    sv{"gradually"},    sv{"steadily"},     sv{"slowly"},
};

constexpr std::array kDirectional = {
    sv{"to"}, sv{"from"}, sv{"into"}, sv{"through"}, sv{"toward"}, sv{"towards"},
};

constexpr std::array kIrregular = {
    // movement verbs
    std::pair{sv{"went"}, sv{"go"}},       std::pair{sv{"gone"}, sv{"go"}},
    std::pair{sv{"goes"}, sv{"go"}},       std::pair{sv{"going"}, sv{"go"}},
    std::pair{sv{"ran"}, sv{"run"}},       std::pair{sv{"running"}, sv{"run"}},
    std::pair{sv{"flew"}, sv{"fly"}},      std::pair{sv{"flown"}, sv{"fly"}},
    std::pair{sv{"flies"}, sv{"fly"}},     std::pair{sv{"flying"}, sv{"fly"}},
    std::pair{sv{"fled"}, sv{"flee"}},     std::pair{sv{"fleeing"}, sv{"flee"}},
    std::pair{sv{"leapt"}, sv{"leap"}},    std::pair{sv{"crept"}, sv{"creep"}},
    std::pair{sv{"slid"}, sv{"slide"}},    std::pair{sv{"slunk"}, sv{"slink"}},
    std::pair{sv{"sped"}, sv{"speed"}},    std::pair{sv{"strode"}, sv{"stride"}},
    std::pair{sv{"stridden"}, sv{"stride"}}, std::pair{sv{"swept"}, sv{"sweep"}},
    std::pair{sv{"trod"}, sv{"tread"}},    std::pair{sv{"trodden"}, sv{"tread"}},
    std::pair{sv{"dove"}, sv{"dive"}},     std::pair{sv{"hied"}, sv{"hie"}},
    std::pair{sv{"hying"}, sv{"hie"}},     std::pair{sv{"seethed"}, sv{"seethe"}},
    std::pair{sv{"splitting"}, sv{"split"}}, std::pair{sv{"labouring"}, sv{"labour"}},
    // auxiliaries and frequent irregulars
    std::pair{sv{"is"}, sv{"be"}},         std::pair{sv{"are"}, sv{"be"}},
    std::pair{sv{"was"}, sv{"be"}},        std::pair{sv{"were"}, sv{"be"}},
    std::pair{sv{"been"}, sv{"be"}},       std::pair{sv{"being"}, sv{"be"}},
    std::pair{sv{"am"}, sv{"be"}},         std::pair{sv{"be"}, sv{"be"}},
    std::pair{sv{"has"}, sv{"have"}},      std::pair{sv{"had"}, sv{"have"}},
    std::pair{sv{"have"}, sv{"have"}},     std::pair{sv{"having"}, sv{"have"}},
    std::pair{sv{"did"}, sv{"do"}},        std::pair{sv{"does"}, sv{"do"}},
    std::pair{sv{"done"}, sv{"do"}},       std::pair{sv{"do"}, sv{"do"}},
    std::pair{sv{"made"}, sv{"make"}},     std::pair{sv{"took"}, sv{"take"}},
    std::pair{sv{"taken"}, sv{"take"}},    std::pair{sv{"came"}, sv{"come"}},
    std::pair{sv{"left"}, sv{"leave"}},    std::pair{sv{"got"}, sv{"get"}},
    std::pair{sv{"gotten"}, sv{"get"}},    std::pair{sv{"saw"}, sv{"see"}},
    std::pair{sv{"seen"}, sv{"see"}},      std::pair{sv{"said"}, sv{"say"}},
    std::pair{sv{"brought"}, sv{"bring"}}, std::pair{sv{"kept"}, sv{"keep"}},
    std::pair{sv{"held"}, sv{"hold"}},     std::pair{sv{"stood"}, sv{"stand"}},
    std::pair{sv{"drove"}, sv{"drive"}},   std::pair{sv{"driven"}, sv{"drive"}},
    std::pair{sv{"rode"}, sv{"ride"}},     std::pair{sv{"ridden"}, sv{"ride"}},
    std::pair{sv{"sent"}, sv{"send"}},     std::pair{sv{"spent"}, sv{"spend"}},
    std::pair{sv{"began"}, sv{"begin"}},   std::pair{sv{"begun"}, sv{"begin"}},
    std::pair{sv{"knew"}, sv{"know"}},     std::pair{sv{"known"}, sv{"know"}},
    std::pair{sv{"thought"}, sv{"think"}}, std::pair{sv{"told"}, sv{"tell"}},
    std::pair{sv{"found"}, sv{"find"}},    std::pair{sv{"gave"}, sv{"give"}},
    std::pair{sv{"given"}, sv{"give"}},    std::pair{sv{"stuck"}, sv{"stick"}},
    std::pair{sv{"fell"}, sv{"fall"}},     std::pair{sv{"fallen"}, sv{"fall"}},
    std::pair{sv{"rose"}, sv{"rise"}},     std::pair{sv{"risen"}, sv{"rise"}},
    std::pair{sv{"caught"}, sv{"catch"}},  std::pair{sv{"bought"}, sv{"buy"}},
    std::pair{sv{"lost"}, sv{"lose"}},     std::pair{sv{"met"}, sv{"meet"}},
    std::pair{sv{"paid"}, sv{"pay"}},      std::pair{sv{"sold"}, sv{"sell"}},
    std::pair{sv{"built"}, sv{"build"}},   std::pair{sv{"led"}, sv{"lead"}},
    std::pair{sv{"won"}, sv{"win"}},       std::pair{sv{"struck"}, sv{"strike"}},
    std::pair{sv{"withdrew"}, sv{"withdraw"}}, std::pair{sv{"withdrawn"}, sv{"withdraw"}},
    std::pair{sv{"forbade"}, sv{"forbid"}}, std::pair{sv{"forbidden"}, sv{"forbid"}},
    std::pair{sv{"sought"}, sv{"seek"}},   std::pair{sv{"shut"}, sv{"shut"}},
    std::pair{sv{"put"}, sv{"put"}},       std::pair{sv{"set"}, sv{"set"}},
    std::pair{sv{"let"}, sv{"let"}},       std::pair{sv{"cut"}, sv{"cut"}},
    std::pair{sv{"hit"}, sv{"hit"}},       std::pair{sv{"spread"}, sv{"spread"}},
    std::pair{sv{"wrote"}, sv{"write"}},   std::pair{sv{"written"}, sv{"write"}},
    std::pair{sv{"became"}, sv{"become"}}, std::pair{sv{"felt"}, sv{"feel"}},
    std::pair{sv{"heard"}, sv{"hear"}},    std::pair{sv{"meant"}, sv{"mean"}},
    std::pair{sv{"understood"}, sv{"understand"}}, std::pair{sv{"undertook"}, sv{"undertake"}},
    std::pair{sv{"lay"}, sv{"lie"}},       std::pair{sv{"bore"}, sv{"bear"}},
    std::pair{sv{"sank"}, sv{"sink"}},     std::pair{sv{"stole"}, sv{"steal"}},
    std::pair{sv{"ate"}, sv{"eat"}},       std::pair{sv{"chose"}, sv{"choose"}},
    std::pair{sv{"chosen"}, sv{"choose"}}, std::pair{sv{"grew"}, sv{"grow"}},
    std::pair{sv{"grown"}, sv{"grow"}},    std::pair{sv{"threw"}, sv{"throw"}},
    std::pair{sv{"thrown"}, sv{"throw"}},  std::pair{sv{"misled"}, sv{"mislead"}},
    std::pair{sv{"dealt"}, sv{"deal"}},    std::pair{sv{"swam"}, sv{"swim"}},
};

// Closed-class words: determiners, pronouns, prepositions, conjunctions,
// modals, particles and negation cues.
constexpr std::array kFunctionWords = {
    sv{"a"},       sv{"an"},      sv{"the"},     sv{"this"},    sv{"that"},    sv{"these"},
    sv{"those"},   sv{"my"},      sv{"our"},     sv{"their"},   sv{"his"},     sv{"her"},
    sv{"its"},     sv{"your"},    sv{"some"},    sv{"any"},     sv{"every"},   sv{"each"},
    sv{"all"},     sv{"both"},    sv{"either"},  sv{"neither"}, sv{"many"},    sv{"much"},
    sv{"more"},    sv{"most"},    sv{"few"},     sv{"several"}, sv{"such"},    sv{"other"},
    sv{"another"}, sv{"i"},       sv{"me"},      sv{"we"},      sv{"us"},      sv{"you"},
    sv{"he"},      sv{"him"},     sv{"she"},     sv{"it"},      sv{"they"},    sv{"them"},
    sv{"who"},     sv{"whom"},    sv{"whose"},   sv{"which"},   sv{"what"},    sv{"where"},
    sv{"when"},    sv{"why"},     sv{"how"},     sv{"there"},   sv{"here"},    sv{"in"},
    sv{"on"},      sv{"at"},      sv{"by"},      sv{"for"},     sv{"with"},    sv{"about"},
    sv{"of"},      sv{"to"},      sv{"from"},    sv{"into"},    sv{"onto"},    sv{"through"},
    sv{"toward"},  sv{"towards"}, sv{"across"},  sv{"over"},    sv{"under"},   sv{"between"},
    sv{"among"},   sv{"after"},   sv{"before"},  sv{"during"},  sv{"since"},   sv{"until"},
    sv{"via"},     sv{"despite"}, sv{"against"}, sv{"around"},  sv{"along"},   sv{"near"},
    sv{"off"},     sv{"out"},     sv{"up"},      sv{"down"},    sv{"within"},  sv{"per"},
    sv{"and"},     sv{"or"},      sv{"but"},     sv{"nor"},     sv{"so"},      sv{"yet"},
    sv{"if"},      sv{"because"}, sv{"while"},   sv{"although"}, sv{"though"}, sv{"unless"},
    sv{"as"},      sv{"than"},    sv{"then"},    sv{"also"},    sv{"too"},     sv{"very"},
    sv{"just"},    sv{"only"},    sv{"even"},    sv{"still"},   sv{"again"},   sv{"already"},
    sv{"will"},    sv{"would"},   sv{"can"},     sv{"could"},   sv{"shall"},   sv{"should"},
    sv{"may"},     sv{"might"},   sv{"must"},    sv{"not"},     sv{"no"},      sv{"never"},
    sv{"none"},    sv{"nobody"},  sv{"nothing"}, sv{"nowhere"}, sv{"n't"},     sv{"without"},
    sv{"cannot"},  sv{"yes"},     sv{"ago"},     sv{"now"},     sv{"today"},   sv{"abroad"},
    sv{"away"},    sv{"ahead"},   sv{"home"},    sv{"one"},     sv{"two"},     sv{"three"},
};

constexpr std::array kCommonVerbs = {
    sv{"arrive"},   sv{"depart"},     sv{"leave"},    sv{"come"},     sv{"enter"},     sv{"exit"},
    sv{"cross"},    sv{"reach"},      sv{"visit"},    sv{"smuggle"},  sv{"ship"},      sv{"transport"},
    sv{"carry"},    sv{"bring"},      sv{"take"},     sv{"send"},     sv{"deliver"},   sv{"deploy"},
    sv{"deport"},   sv{"detain"},     sv{"delay"},    sv{"divert"},   sv{"decide"},    sv{"declare"},
    sv{"describe"}, sv{"discover"},   sv{"dispatch"}, sv{"disembark"}, sv{"discuss"},  sv{"dismiss"},
    sv{"disrupt"},  sv{"displace"},   sv{"mislead"},  sv{"misplace"}, sv{"miss"},      sv{"cancel"},
    sv{"postpone"}, sv{"prevent"},    sv{"avoid"},    sv{"stop"},     sv{"suspend"},   sv{"ban"},
    sv{"close"},    sv{"restrict"},   sv{"block"},    sv{"halt"},     sv{"strand"},    sv{"stick"},
    sv{"say"},      sv{"report"},     sv{"announce"}, sv{"plan"},     sv{"expect"},    sv{"want"},
    sv{"need"},     sv{"get"},        sv{"make"},     sv{"see"},      sv{"know"},      sv{"think"},
    sv{"arrest"},   sv{"seize"},      sv{"cause"},    sv{"continue"}, sv{"begin"},     sv{"start"},
    sv{"remain"},   sv{"stay"},       sv{"allow"},    sv{"help"},     sv{"use"},       sv{"try"},
    sv{"ask"},      sv{"include"},    sv{"follow"},   sv{"hold"},     sv{"keep"},      sv{"open"},
    sv{"find"},     sv{"give"},       sv{"tell"},     sv{"call"},     sv{"show"},      sv{"drive"},
    sv{"ride"},     sv{"sail"},       sv{"commute"},  sv{"migrate"},  sv{"evacuate"},  sv{"relocate"},
    sv{"export"},   sv{"import"},     sv{"rescue"},   sv{"infect"},   sv{"fear"},      sv{"worry"},
    sv{"lose"},     sv{"win"},        sv{"play"},     sv{"meet"},     sv{"host"},      sv{"attend"},
    sv{"schedule"}, sv{"reschedule"}, sv{"resume"},   sv{"welcome"},  sv{"land"},      sv{"board"},
    sv{"book"},     sv{"increase"},   sv{"decrease"}, sv{"rise"},     sv{"fall"},      sv{"drop"},
    sv{"grow"},     sv{"celebrate"},  sv{"order"},    sv{"confirm"},  sv{"force"},     sv{"shut"},
    sv{"lock"},     sv{"quarantine"}, sv{"isolate"},  sv{"impose"},   sv{"lift"},      sv{"ease"},
    sv{"permit"},   sv{"deny"},       sv{"refuse"},   sv{"reject"},   sv{"abandon"},   sv{"wait"},
    sv{"spend"},    sv{"buy"},        sv{"sell"},     sv{"pay"},      sv{"cost"},      sv{"earn"},
    sv{"work"},     sv{"live"},       sv{"die"},      sv{"kill"},     sv{"trap"},      sv{"catch"},
    sv{"develop"},  sv{"have"},       sv{"do"},       sv{"be"},       sv{"become"},    sv{"feel"},
    sv{"hear"},     sv{"mean"},       sv{"write"},    sv{"lead"},     sv{"build"},     sv{"seek"},
    sv{"withdraw"}, sv{"forbid"},     sv{"strike"},   sv{"choose"},   sv{"throw"},     sv{"swim"},
    sv{"deal"},     sv{"steal"},      sv{"sink"},     sv{"eat"},      sv{"put"},       sv{"set"},
    sv{"let"},      sv{"cut"},        sv{"hit"},      sv{"spread"},   sv{"join"},      sv{"reopen"},
    sv{"depend"},   sv{"demand"},     sv{"defend"},   sv{"destroy"},  sv{"design"},    sv{"detect"},
    sv{"determine"}, sv{"disappear"}, sv{"distribute"}, sv{"misjudge"}, sv{"stand"},   sv{"understand"},
    sv{"undertake"}, sv{"lie"},       sv{"bear"},     sv{"tour"},     sv{"explore"},   sv{"cruise"},
    sv{"bike"},     sv{"cycle"},      sv{"paddle"},   sv{"sprawl"},   sv{"threaten"},  sv{"collect"},
};

constexpr std::array kCommonNouns = {
    sv{"flight"},    sv{"train"},     sv{"bus"},       sv{"car"},       sv{"ship"},       sv{"plane"},
    sv{"passenger"}, sv{"border"},    sv{"gold"},      sv{"drug"},      sv{"tourist"},    sv{"people"},
    sv{"trip"},      sv{"journey"},   sv{"route"},     sv{"airport"},   sv{"station"},    sv{"port"},
    sv{"city"},      sv{"country"},   sv{"state"},     sv{"travel"},    sv{"traveler"},   sv{"traveller"},
    sv{"visitor"},   sv{"crew"},      sv{"truck"},     sv{"road"},      sv{"highway"},    sv{"bird"},
    sv{"migration"}, sv{"migrant"},   sv{"refugee"},   sv{"worker"},    sv{"student"},    sv{"team"},
    sv{"match"},     sv{"game"},      sv{"event"},     sv{"festival"},  sv{"cruise"},     sv{"tour"},
    sv{"holiday"},   sv{"vacation"},  sv{"pandemic"},  sv{"virus"},     sv{"lockdown"},   sv{"restriction"},
    sv{"cargo"},     sv{"goods"},     sv{"food"},      sv{"medicine"},  sv{"smuggler"},   sv{"smuggling"},
    sv{"police"},    sv{"customs"},   sv{"official"},  sv{"government"}, sv{"week"},      sv{"month"},
    sv{"year"},      sv{"day"},       sv{"time"},      sv{"idea"},      sv{"cancer"},     sv{"feature"},
    sv{"alarm"},     sv{"clock"},     sv{"fruit"},     sv{"fear"},      sv{"cake"},       sv{"recipe"},
    sv{"flour"},     sv{"water"},     sv{"river"},     sv{"sea"},       sv{"ocean"},      sv{"mountain"},
    sv{"family"},    sv{"friend"},    sv{"athlete"},   sv{"fan"},       sv{"spectator"},  sv{"olympics"},
    sv{"express"},   sv{"ticket"},    sv{"hotel"},     sv{"guest"},     sv{"border"},     sv{"wildlife"},
    sv{"animal"},    sv{"herd"},      sv{"flock"},     sv{"storm"},     sv{"flood"},      sv{"traffic"},
    sv{"detour"},    sv{"morning"},   sv{"evening"},   sv{"night"},     sv{"weekend"},    sv{"news"},
    sv{"report"},    sv{"study"},     sv{"case"},      sv{"patient"},   sv{"hospital"},   sv{"doctor"},
    sv{"supply"},    sv{"shipment"},  sv{"container"}, sv{"vessel"},    sv{"boat"},       sv{"ferry"},
    sv{"rail"},      sv{"railway"},   sv{"line"},      sv{"service"},   sv{"airline"},    sv{"carrier"},
    sv{"land"},      sv{"board"},     sv{"book"},      sv{"order"},     sv{"drop"},       sv{"fall"},
    sv{"rise"},      sv{"increase"},  sv{"decrease"},  sv{"stop"},      sv{"ban"},        sv{"block"},
    sv{"plan"},      sv{"help"},      sv{"use"},       sv{"work"},      sv{"play"},       sv{"cost"},
    sv{"visit"},     sv{"return"},    sv{"move"},      sv{"run"},       sv{"walk"},       sv{"race"},
    sv{"step"},      sv{"head"},      sv{"pass"},      sv{"charge"},    sv{"issue"},      sv{"file"},
    sv{"march"},     sv{"escape"},    sv{"flight"},    sv{"hike"},      sv{"jump"},       sv{"leg"},
    sv{"bullion"},   sv{"heroin"},    sv{"cocaine"},   sv{"weapon"},    sv{"cash"},       sv{"jewelry"},
    sv{"gang"},      sv{"network"},   sv{"group"},     sv{"quarantine"}, sv{"delay"},     sv{"demand"},
    sv{"design"},    sv{"deal"},      sv{"cycle"},     sv{"lie"},       sv{"host"},       sv{"welcome"},
    sv{"delivery"},  sv{"decision"},  sv{"discovery"}, sv{"discussion"}, sv{"distance"},  sv{"destination"},
};

constexpr std::array kCommonAdjectives = {
    sv{"able"},       sv{"available"}, sv{"annual"},    sv{"active"},    sv{"actual"},    sv{"additional"},
    sv{"alive"},      sv{"alone"},     sv{"aware"},     sv{"afraid"},    sv{"asleep"},    sv{"awake"},
    sv{"ample"},      sv{"average"},   sv{"armed"},     sv{"arctic"},    sv{"distant"},   sv{"disabled"},
    sv{"dismal"},     sv{"new"},       sv{"old"},       sv{"large"},     sv{"small"},     sv{"big"},
    sv{"international"}, sv{"domestic"}, sv{"local"},   sv{"national"},  sv{"foreign"},   sv{"major"},
    sv{"busy"},       sv{"empty"},     sv{"full"},      sv{"possible"},  sv{"impossible"}, sv{"unable"},
    sv{"long"},       sv{"short"},     sv{"early"},     sv{"late"},      sv{"recent"},    sv{"last"},
    sv{"first"},      sv{"second"},    sv{"next"},      sv{"good"},      sv{"bad"},       sv{"great"},
    sv{"high"},       sv{"low"},       sv{"free"},      sv{"safe"},      sv{"daily"},     sv{"weekly"},
    sv{"commercial"}, sv{"popular"},   sv{"public"},    sv{"private"},   sv{"illegal"},   sv{"global"},
    sv{"northern"},   sv{"southern"},  sv{"eastern"},   sv{"western"},   sv{"remote"},    sv{"coastal"},
    sv{"open"},       sv{"closed"},    sv{"strict"},    sv{"heavy"},     sv{"light"},     sv{"fast"},
    sv{"endless"},    sv{"careless"},  sv{"homeless"},  sv{"useless"},   sv{"helpless"},  sv{"restless"},
    sv{"countless"},  sv{"tireless"},  sv{"fearless"},  sv{"aimless"},   sv{"seamless"},  sv{"stateless"},
    sv{"dishonest"},  sv{"disastrous"}, sv{"atypical"}, sv{"asymmetric"}, sv{"abnormal"}, sv{"apolitical"},
    sv{"migratory"},  sv{"seasonal"},  sv{"stuck"},     sv{"stranded"},  sv{"grounded"},  sv{"dangerous"},
};

constexpr std::array kStopwords = {
    sv{"a"},        sv{"about"},   sv{"above"},    sv{"after"},   sv{"again"},   sv{"against"},
    sv{"all"},      sv{"am"},      sv{"an"},       sv{"and"},     sv{"any"},     sv{"are"},
    sv{"as"},       sv{"at"},      sv{"be"},       sv{"because"}, sv{"been"},    sv{"before"},
    sv{"being"},    sv{"below"},   sv{"between"},  sv{"both"},    sv{"but"},     sv{"by"},
    sv{"can"},      sv{"cannot"},  sv{"could"},    sv{"did"},     sv{"do"},      sv{"does"},
    sv{"doing"},    sv{"down"},    sv{"during"},   sv{"each"},    sv{"few"},     sv{"for"},
    sv{"from"},     sv{"further"}, sv{"had"},      sv{"has"},     sv{"have"},    sv{"having"},
    sv{"he"},       sv{"her"},     sv{"here"},     sv{"hers"},    sv{"herself"}, sv{"him"},
    sv{"himself"},  sv{"his"},     sv{"how"},      sv{"i"},       sv{"if"},      sv{"in"},
    sv{"into"},     sv{"is"},      sv{"it"},       sv{"its"},     sv{"itself"},  sv{"just"},
    sv{"me"},       sv{"more"},    sv{"most"},     sv{"my"},      sv{"myself"},  sv{"no"},
    sv{"nor"},      sv{"not"},     sv{"now"},      sv{"n't"},     sv{"of"},      sv{"off"},
    sv{"on"},       sv{"once"},    sv{"only"},     sv{"or"},      sv{"other"},   sv{"our"},
    sv{"ours"},     sv{"ourselves"}, sv{"out"},    sv{"over"},    sv{"own"},     sv{"same"},
    sv{"she"},      sv{"should"},  sv{"so"},       sv{"some"},    sv{"such"},    sv{"than"},
    sv{"that"},     sv{"the"},     sv{"their"},    sv{"theirs"},  sv{"them"},    sv{"themselves"},
    sv{"then"},     sv{"there"},   sv{"these"},    sv{"they"},    sv{"this"},    sv{"those"},
    sv{"through"},  sv{"to"},      sv{"too"},      sv{"under"},   sv{"until"},   sv{"up"},
    sv{"very"},     sv{"was"},     sv{"we"},       sv{"were"},    sv{"what"},    sv{"when"},
    sv{"where"},    sv{"which"},   sv{"while"},    sv{"who"},     sv{"whom"},    sv{"why"},
    sv{"will"},     sv{"with"},    sv{"would"},    sv{"you"},     sv{"your"},    sv{"yours"},
    sv{"yourself"}, sv{"yourselves"}, sv{"also"},  sv{"said"},    sv{"says"},    sv{"say"},
    sv{"may"},      sv{"might"},   sv{"must"},     sv{"shall"},   sv{"via"},     sv{"per"},
    sv{"s"},        sv{"t"},       sv{"rt"},       sv{"amp"},     sv{"one"},     sv{"two"},
    sv{"however"},  sv{"since"},   sv{"among"},    sv{"within"},  sv{"without"}, sv{"across"},
    sv{"upon"},     sv{"yet"},     sv{"already"},  sv{"even"},    sv{"still"},   sv{"many"},
};

}  // namespace

std::span<const std::string_view> movement_verbs() { return kMovementVerbs; }
std::span<const std::string_view> movement_adjectives() { return kMovementAdjectives; }
std::span<const std::string_view> movement_adverbs() { return kMovementAdverbs; }
std::span<const std::string_view> directional_prepositions() { return kDirectional; }
std::span<const std::pair<std::string_view, std::string_view>> irregular_forms() { return kIrregular; }
std::span<const std::string_view> function_words() { return kFunctionWords; }
std::span<const std::string_view> common_verbs() { return kCommonVerbs; }
std::span<const std::string_view> common_nouns() { return kCommonNouns; }
std::span<const std::string_view> common_adjectives() { return kCommonAdjectives; }
std::span<const std::string_view> stopwords() { return kStopwords; }

}  // namespace geomove::lexicon
