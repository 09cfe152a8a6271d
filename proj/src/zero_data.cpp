// Seed ordinates for the bundled zero table: the first 100 positive
// ordinates of nontrivial Riemann zeta zeros, 19 significant digits.
// Each seed is re-refined by Newton iteration and verified at load.

#include "ramsum/zeta.hpp"

#include <iterator>

namespace ramsum {

namespace {

constexpr double kZeroSeeds[100] = {
    14.13472514173469379, 21.02203963877155499,
    25.01085758014568876, 30.42487612585951321,
    32.93506158773918969, 37.58617815882567126,
    40.91871901214749519, 43.32707328091499952,
    48.00515088116715973, 49.77383247767230218,
    52.97032147771446064, 56.44624769706339480,
    59.34704400260235308, 60.83177852460980984,
    65.11254404808160666, 67.07981052949417371,
    69.54640171117397925, 72.06715767448190758,
    75.70469069908393317, 77.14484006887480537,
    79.33737502024936792, 82.91038085408603018,
    84.73549298051705011, 87.42527461312522941,
    88.80911120763446542, 92.49189927055848430,
    94.65134404051988697, 95.87063422824530976,
    98.83119421819369223, 101.3178510057313912,
    103.7255380404783394, 105.4466230523260945,
    107.1686111842764075, 111.0295355431696745,
    111.8746591769926371, 114.3202209154527128,
    116.2266803208575544, 118.7907828659762173,
    121.3701250024206459, 122.9468292935525882,
    124.2568185543457672, 127.5166838795964951,
    129.5787041999560510, 131.0876885309326567,
    133.4977372029975865, 134.7565097533738713,
    138.1160420545334432, 139.7362089521213890,
    141.1237074040211238, 143.1118458076206327,
    146.0009824867655185, 147.4227653425596020,
    150.0535204207848804, 150.9252576122414668,
    153.0246938111988962, 156.1129092942378676,
    157.5975918175940599, 158.8499881714204987,
    161.1889641375960275, 163.0307096871819872,
    165.5370691879004188, 167.1844399781745134,
    169.0945154155688215, 169.9119764794116990,
    173.4115365195915530, 174.7541915233657258,
    176.4414342977104189, 178.3774077760999773,
    179.9164840202569961, 182.2070784843664619,
    184.8744678483875088, 185.5987836777074715,
    187.2289225835018520, 189.4161586560169371,
    192.0266563607137865, 193.0797266038457040,
    195.2653966795292353, 196.8764818409583169,
    198.0153096762519124, 201.2647519437037887,
    202.4935945141405343, 204.1896718031045543,
    205.3946972021632860, 207.9062588878062099,
    209.5765097168562599, 211.6908625953653076,
    213.3479193597126662, 214.5470447834914232,
    216.1695385082637003, 219.0675963490213790,
    220.7149188393140034, 221.4307055546933387,
    224.0070002546043352, 224.9833246695822875,
    227.4214442796792913, 229.3374133055253481,
    231.2501887004991648, 231.9872352531802486,
    233.6934041789083006, 236.5242296658162058,
};

} // namespace

std::vector<double> bundled_zero_seeds() {
    return std::vector<double>(std::begin(kZeroSeeds), std::end(kZeroSeeds));
}

} // namespace ramsum
