#pragma once

// Chebyshev tables for K0(x) e^x sqrt(x) and K1(x) e^x sqrt(x) on x >= 2,
// in the variable v = 4/x - 1 (v in (-1,1]).  c0 is halved in Clenshaw.
// Fitted to 34 terms; max relative error over [2,700] is below 1e-21,
// so truncation at double precision is coefficient-exact.

namespace mpzeta::specfun::detail {

inline constexpr double kK0ChebLarge[] = {
    2.4403030820659554547,
    -0.031448101311964500543,
    0.0015698838857300533749,
    -0.00012849549581627802638,
    0.000013949813718876499364,
    -1.8317555227191194848e-6,
    2.7668136394450150761e-7,
    -4.6604898976879476656e-8,
    8.5740340174142260858e-9,
    -1.6975345093890615156e-9,
    3.5773972814003284472e-10,
    -7.9574892444773970377e-11,
    1.8559491149549265549e-11,
    -4.5145978833745191744e-12,
    1.1403405882073442333e-12,
    -2.9800969231481783203e-13,
    8.0328907750683735539e-14,
    -2.2275133267462944225e-14,
    6.3400764762765996448e-15,
    -1.8485933779207957864e-15,
    5.5120559994016385454e-16,
    -1.6782311257483393562e-16,
    5.2103917774827579149e-17,
    -1.6475805935875518657e-17,
    5.3004337613219473776e-18,
    -1.7331711759236403813e-18,
    5.7551085813707954774e-19,
    -1.9390940268784056509e-19,
    6.6245701317351257123e-20,
    -2.293115457472076902e-20,
    8.0360192462042195183e-21,
    -2.8448123183126521006e-21,
    1.004602659932387099e-21,
    -3.2091104768562429703e-22,
};

inline constexpr double kK1ChebLarge[] = {
    2.7206261904844426694,
    0.10392373657681723844,
    -0.0028578168596227793868,
    0.00019521551847135163111,
    -0.0000193619797416608296,
    2.4064849478372171171e-6,
    -3.5019606030878125421e-7,
    5.7410841254500492923e-8,
    -1.0345762465678097027e-8,
    2.0150497551970346161e-9,
    -4.1903547593419255842e-10,
    9.2183151876053141258e-11,
    -2.1299678384277910215e-11,
    5.1396396734823435397e-12,
    -1.2891739609498229337e-12,
    3.3484196660522430839e-13,
    -8.9767051820101452138e-14,
    2.4771544242195966475e-14,
    -7.019837089214720205e-15,
    2.0387031662397438244e-15,
    -6.0570472706401837077e-16,
    1.8380935752361398007e-16,
    -5.6894628490242813676e-17,
    1.7940510474681616007e-17,
    -5.7567444716754348011e-18,
    1.8778651641237688602e-18,
    -6.221644630456596683e-19,
    2.0919108570919237358e-19,
    -7.1326701222624816879e-20,
    2.4644646176027661782e-20,
    -8.6216028299033551468e-21,
    3.0471914478599429299e-21,
    -1.0745001870039544379e-21,
    3.4284931512919763669e-22,
};

inline constexpr int kBesselChebN = 34;

}  // namespace mpzeta::specfun::detail
