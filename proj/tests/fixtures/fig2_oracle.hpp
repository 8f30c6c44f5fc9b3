// Generated by tests/oracle/gen_fig2_fixtures.py (mpmath, 50 digits). Do not edit.
#pragma once

namespace stherm::fixtures {

inline constexpr double kZAtT1 = 3.0914476122853837534;
inline constexpr double kZEvenAtT1 = 1.8187307530779818587;
inline constexpr double kZOddAtT1 = 1.2727168592074018948;
inline constexpr double kEvenPopE0AtT1 = 0.54983399731247790856;
inline constexpr double kEvenPopE2AtT1 = 0.45016600268752209144;
inline constexpr double kOddPopE1AtT1 = 0.71094950262500396346;
inline constexpr double kOddPopE3AtT1 = 0.28905049737499603654;
inline constexpr double kCoshOne = 1.5430806348152437785;
inline constexpr double kMinusSinhOne = -1.1752011936438014569;

// T0 = 0.05, T = 1
struct PointCold {
  static constexpr double t0 = 0.05;
  static constexpr double t = 1;
  static constexpr double p_even = 0.88268957059675716844;
  static constexpr double p_odd = 0.11731042940324283156;
  static constexpr double rho0 = 0.48533273498724966009;
  static constexpr double rho1 = 0.083401791436961131614;
  static constexpr double rho2 = 0.39735683560950750835;
  static constexpr double rho3 = 0.033908637966281699944;
  static constexpr double e_ss = 0.12172018423187931478;
  static constexpr double e_gibbs = 0.20123560597254762022;
  static constexpr double e_initial = 0.014906292537916518633;
  static constexpr double s_ss = 1.0395127258268750992;
  static constexpr double s_gibbs = 1.3298750701185842926;
  static constexpr double s_initial = 0.44105748104486533988;
  static constexpr double rel_ent = 0.21084692255104088795;
  static constexpr double h_sectors = 0.36153173522625160565;
  static constexpr double delta_s_sys = 0.65189407951796079905;
  static constexpr double delta_s_bath = -0.079515421740668305445;
  static constexpr double erasure_cost = 0.57237865777729249361;
  static constexpr double lambda = 0.57325328862672878431;
  static constexpr double free_energy_ss = -0.91779254159499578446;
  static constexpr double ergotropy = 0.031395504417254637674;
  static constexpr double beta_star = 4.9985163865491755106;
  static constexpr double asymptotic = 0.050552936890439603466;
};

// T0 = 1, T = 0.05
struct PointHot {
  static constexpr double t0 = 1;
  static constexpr double t = 0.05;
  static constexpr double p_even = 0.58831039085066909785;
  static constexpr double p_odd = 0.41168960914933090215;
  static constexpr double rho0 = 0.57772891663794881513;
  static constexpr double rho1 = 0.41168960287930658919;
  static constexpr double rho2 = 0.010581474212720282721;
  static constexpr double rho3 = 6.270024312960625148e-9;
  static constexpr double e_ss = 0.043285261400499028424;
  static constexpr double e_gibbs = 0.014906292537916518633;
  static constexpr double e_initial = 0.20123560597254762022;
  static constexpr double s_ss = 0.7304714148524563686;
  static constexpr double s_gibbs = 0.44105748104486533988;
  static constexpr double s_initial = 1.3298750701185842926;
  static constexpr double rel_ent = 0.27816544344405916711;
  static constexpr double h_sectors = 0.67746760768387512462;
  static constexpr double delta_s_sys = 0.3880536738762840959;
  static constexpr double delta_s_bath = 0.56757937725165019582;
  static constexpr double erasure_cost = 0.95563305112793429173;
  static constexpr double lambda = 0.84769455573323652639;
  static constexpr double free_energy_ss = 0.0067616906578762099939;
  static constexpr double ergotropy = 0.0;
  static constexpr double beta_star = 12.382073360001755197;
  static constexpr double asymptotic = 0.0099483238569255180015;
};

// T0 = 2, T = 0.5
struct PointMid {
  static constexpr double t0 = 2;
  static constexpr double t = 0.5;
  static constexpr double p_even = 0.55011805928889371876;
  static constexpr double p_odd = 0.44988194071110628124;
  static constexpr double rho0 = 0.32934889370127092068;
  static constexpr double rho1 = 0.38606570834173774426;
  static constexpr double rho2 = 0.22076916558762279808;
  static constexpr double rho3 = 0.06381623236936853698;
  static constexpr double e_ss = 0.14657663632106687102;
  static constexpr double e_gibbs = 0.13384934865870095901;
  static constexpr double e_initial = 0.25490143893321275336;
  static constexpr double s_ss = 1.2423327983605597474;
  static constexpr double s_gibbs = 1.2325456926179557292;
  static constexpr double s_initial = 1.36946975007797684;
  static constexpr double rel_ent = 0.015667469582127805864;
  static constexpr double h_sectors = 0.68811509451596535654;
  static constexpr double delta_s_sys = 0.67832798877336133838;
  static constexpr double delta_s_bath = 0.025454575324731824018;
  static constexpr double erasure_cost = 0.7037825640980931624;
  static constexpr double lambda = 0.89486106655817314072;
  static constexpr double free_energy_ss = -0.47458976285921300268;
  static constexpr double ergotropy = 0.0056716814640466823575;
  static constexpr double beta_star = 1.8968533402789576149;
  static constexpr double asymptotic = 0.0077026182422827554769;
};

// T0 = 2, T = 0.1
struct PointPassive {
  static constexpr double t0 = 2;
  static constexpr double t = 0.1;
  static constexpr double p_even = 0.55011805928889371876;
  static constexpr double p_odd = 0.44988194071110628124;
  static constexpr double rho0 = 0.48454237916452107839;
  static constexpr double rho1 = 0.44982642771978837123;
  static constexpr double rho2 = 0.065575680124372640374;
  static constexpr double rho3 = 0.000055512991317910001922;
  static constexpr double e_ss = 0.0581532917881712752;
  static constexpr double e_gibbs = 0.04250787981379951097;
  static constexpr double e_initial = 0.25490143893321275336;
  static constexpr double s_ss = 0.88964697920753182757;
  static constexpr double s_gibbs = 0.83271496401897474176;
  static constexpr double s_initial = 1.36946975007797684;
  static constexpr double rel_ent = 0.099522104555160556494;
  static constexpr double h_sectors = 0.68811509451596535654;
  static constexpr double delta_s_sys = 0.63118307932740827073;
  static constexpr double delta_s_bath = 0.15645411974371764231;
  static constexpr double erasure_cost = 0.78763719907112591303;
  static constexpr double lambda = 0.92633763453450345767;
  static constexpr double free_energy_ss = -0.030811406132581907557;
  static constexpr double ergotropy = 0.0;
  static constexpr double beta_star = 8.6520082512065485056;
  static constexpr double asymptotic = 0.0095319782604503596592;
};

}  // namespace stherm::fixtures
