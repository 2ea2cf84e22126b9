#pragma once

// Generated by generate.py; do not edit by hand.

namespace oracle {

// standard settings, beta = 0
inline constexpr double kChshRest = -2.82842712474619;
// standard settings, beta = 0.99 z
inline constexpr double kChshPerp099 = -2.8284271247461894;
// standard settings, beta = 0.9 at phi = pi/4
inline constexpr double kChshInPlane09Quarter = -2.63255621610474;
// standard settings, beta = 0.99 x
inline constexpr double kChshAlongX099 = -2.25976086065344;
// standard settings, beta = 0.99 at phi = pi/4
inline constexpr double kChshInPlane099Quarter = -2.259760860653442;
// max over 360 periodic phi of |c| at in-plane beta = 0.999
inline constexpr double kRow0999MaxAbs = 2.087335105769559;
// 50/50 mixture of beta = 0 and beta = 0.99 x
inline constexpr double kMixRestAlongX099 = -2.544093992699815;
// orthogonal pair at 45 degrees to a beam of speed 0.8
inline constexpr double kEq19At08 = -0.4705882352941175;
// {ax, ay, az, bx, by, bz, betax, betay, betaz, E}
inline constexpr double kCorrelationSamples[][10] = {
    {0.23116513807972336, -0.7889550192379909, 0.5693089289267855, 0.3721727614093842, -0.7720065840383465, -0.5152603903526423, 0.16842413344075802, -0.41663576813685155, -0.022134789341666128, -0.4910031222340798},
    {0.7478725302951716, 0.6614630001657215, 0.05615494494397115, 0.7552594695029808, 0.3132345194926685, -0.5757319424213605, 0.17214830136632173, -0.4476465354593051, 0.41009737126673584, -0.7484752624485247},
    {-0.1309649770121527, -0.4824017199581246, 0.8661043559396578, -0.26845594425984226, -0.7441114045820866, -0.6117431025867237, 0.4739903814204826, 0.32540669249529763, 0.36751439446172773, 0.18921667508576748},
    {0.9564148460494043, -0.181496412000589, -0.22875684620838513, -0.5347019997323487, 0.4047388387593756, 0.7418087650344525, -0.06447258263577237, -0.4753687269794783, -0.4664995113036757, 0.7126336377763357},
    {0.6543109409404101, 0.4781564559471471, -0.5858699481981807, 0.6835990923462958, 0.3435814035026465, 0.6439286452010595, 0.005686627956563891, 0.0014591034067283804, 0.0044303435295598844, -0.23432025739026627},
    {0.17911771191914674, 0.39110105750788604, -0.9027495821616661, -0.37373622409103285, -0.5499253318277398, -0.7469292899708295, -0.07402123369475902, 0.4021825061962674, -0.2329336445754426, -0.35568584329973124},
    {-0.9763871298872112, -0.19429752603854575, 0.09442798296011085, 0.48205100996247563, 0.5848420859477323, 0.6523699550856574, -0.13749119584223574, -0.182290594890077, 0.33827258005068966, 0.49843168132417887},
    {-0.6581381395570688, -0.5846731480639152, -0.4743537700845131, 0.5762952195823848, 0.16509604152111607, 0.8003918521327842, -0.22410983197261625, 0.0831599378794877, 0.32814532403216645, 0.8528264649314605},
};
// largest eigenvalue of a.S for p = (1,2,2), m = 1, a = (0.6, 0, 0.8)
inline constexpr double kDiracSpinEigTop = 0.38209946349085633;
// smallest eigenvalue of the same operator
inline constexpr double kDiracSpinEigBottom = -0.3820994634908561;
// largest eigenvalue of a.S for p = (3,0,0), m = 4, a = y
inline constexpr double kDiracSpinEigPerp = 0.4000000000000001;
// Nelder-Mead maximum of |c| at beta = 0.99 x
inline constexpr double kBestChshAlongX099 = 2.82842712474619;

}  // namespace oracle
