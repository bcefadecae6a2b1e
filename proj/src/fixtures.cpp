#include "icl/fixtures.hpp"

namespace icl {
namespace fixtures {

namespace {

const std::vector<std::string> Y3_P2 = {"1", "-2", "-24", "-5", "19", "98", "-574", "-2835", "2330", "392"};
const std::vector<std::string> Y3_P1 = {"-9", "16", "410", "-8", "-5164", "-7196", "12896", "65824", "-192637", "-1302860", "327886", "6666128", "3469546", "-6576560", "-2874016", "1967104", "752640"};
const std::vector<std::string> Y3_P0 = {"4", "-6", "-224", "29", "3808", "3272", "-21680", "-71496", "87964", "1146670", "-856344", "-9773745", "2595240", "30066076", "1626384", "-26569152", "-8783616", "-1204224", "2007040"};
const std::vector<std::string> Y3_F1_num = {"3", "0", "-59", "-82", "386", "8", "64"};
const std::vector<std::string> Y3_F2_num = {"1", "2", "-2"};
const std::vector<std::string> Y3s_NY_bracket = {"-16", "16", "-32", "8", "-11", "1", "0", "6"};
const std::vector<std::string> YT3_P6 = {"49", "-364", "7443", "106680", "-3740777", "24032176", "47392381", "-768760124", "434664056", "6474551520", "15333496352", "-94576000000", "-23192809472", "-209927829504", "1205147090944", "2518865879040", "-5967097036800", "464889446400"};
const std::vector<std::string> YT3_P5 = {"147", "-784", "34119", "499141", "-16853044", "107083800", "133819572", "-2662652062", "7182763949", "-38685730792", "-2295775019", "1256316716689", "1946216478788", "-22970672645976", "-61245521268224", "201166769452896", "618725352473088", "241117241392640", "-2846232832169984", "-9069732118712320", "-4237195746729984", "38088998121308160", "30557536675430400", "-67498529469235200", "5020806021120000"};
const std::vector<std::string> YT3_P4 = {"931", "-5138", "186393", "3790389", "-118172923", "631583771", "3600235371", "-29452365937", "-59295462952", "428924564347", "2584065207968", "-9028528613608", "-45199723462020", "127674138396992", "546200976422432", "-956452174732544", "-7980786065196160", "6645859876651520", "71955514644985856", "30188250588135424", "-294517075356614656", "-626862114022522880", "-548610793223356416", "3620634209723351040", "3202063539476889600", "-7836264826719436800", "562330274365440000"};
const std::vector<std::string> YT3_P3 = {"2254", "-21133", "533670", "7774186", "-343848072", "2843958768", "2636314376", "-113666172030", "217652915670", "1232145138001", "668812543530", "-27269045355036", "9687172326860", "64823043832572", "129769752723552", "3334508426832544", "-7015978530910848", "-35731466794253184", "23397830675772928", "230844285233797120", "332436165839831040", "-1254549778859409408", "-848931834754990080", "-4824757963497799680", "11079955148990054400", "24773736838201344000", "-41266384607379456000", "2811651371827200000"};
const std::vector<std::string> YT3_P2 = {"7987", "-106015", "2254771", "21276545", "-1389870493", "15597930449", "-32488744995", "-452151200437", "2441550352242", "857310545482", "-7935890967120", "-145383247830248", "414373001033428", "778716878219200", "-721601939503388", "-6064402640954016", "-39182557846936736", "154325934113136384", "135175191464703616", "-1019978058716864000", "349567990475905024", "4342034847529598976", "-7523898588462022656", "3172467314793676800", "-16311072130508390400", "14913046820133273600", "101906251242799104000", "-130054335243485184000", "8434954115481600000"};
const std::vector<std::string> YT3_P1 = {"-9261", "122171", "-2676882", "-25882894", "1671294354", "-18721639514", "39103736504", "538227200312", "-2917831385349", "-599703686985", "5343977363342", "188404041710426", "-527516229973280", "-759726033790536", "612261498482876", "3979478375375692", "55269675209779600", "-152394614023808544", "-246857972154239232", "953808829975566464", "-201098747980344320", "-1023471173198333952", "364788984254619648", "-120979270258114560", "-616703179652628480", "1036215739573862400", "4873843971588096000", "-6710038906798080000", "421747705774080000"};
const std::vector<std::string> YT3_P0 = {"84672", "-1111320", "24962808", "246121272", "-15746069112", "176119304760", "-368590752120", "-5031984639480", "27382956586968", "1982678836896", "-14699422810656", "-1884372068029344", "5053923219182592", "6557432066372256", "-1761836408896896", "-40698424759766784", "-535796399651893248", "1472339197313387520", "2190279912630165504", "-8808777472942522368", "2316960321752137728", "10191253169267146752", "-7536908069936824320", "3609286260943749120", "-544662214410240000", "695978420915404800", "-32133158535168000"};
const std::vector<std::string> Y4_P2 = {"-15", "0", "1086", "0", "-28106", "0", "328716", "0", "-1946216", "0", "4791440", "0", "-4697088", "0", "8682368", "0", "-17308416", "0", "1781760"};
const std::vector<std::string> Y4_P1 = {"75", "0", "-7716", "0", "319862", "0", "-7044848", "0", "92471304", "0", "-761556288", "0", "3861020800", "0", "-11558422912", "0", "22069511424", "0", "-42440728576", "0", "101426089984", "0", "-147848548352", "0", "72672886784", "0", "-17528389632", "0", "2736783360"};
const std::vector<std::string> Y4_P0 = {"-45", "0", "5400", "0", "-261002", "0", "6787240", "0", "-107032250", "0", "1079592480", "0", "-6995904504", "0", "28478625024", "0", "-72563446848", "0", "142196898048", "0", "-402528466944", "0", "1067417646080", "0", "-1296486492160", "0", "418540593152", "0", "-55343579136", "0", "13683916800"};
const std::vector<std::string> Y5_R1_coeffs = {"15", "0", "-950", "-550", "25581", "14856", "-363086", "-57174", "2727087", "-1243960", "-9109540", "10083482", "8271200", "-23345456", "-2557976", "19604672", "3295040", "-1531392", "-513024"};
const std::vector<std::string> Y5_R2_coeffs = {"3", "6", "-103", "-292", "1207", "2214", "-7360", "3674", "6896", "-21328", "-13080", "-96", "-256"};
const std::vector<std::string> PD3_P4 = {"-18", "-126", "-536", "-581", "11332", "56216", "141103", "316146", "324516", "-102512", "512", "104448"};
const std::vector<std::string> PD3_P3 = {"-36", "-450", "-270", "17199", "110892", "331122", "-365893", "-9173304", "-40917443", "-92069955", "-128675122", "-89628548", "223226064", "725436224", "509586688", "-185729024", "25788416", "133693440"};
const std::vector<std::string> PD3_P2 = {"36", "396", "6114", "59550", "302337", "857367", "887406", "-6754260", "-39314109", "-48807357", "175442484", "683394108", "1327431600", "2198750784", "1607543040", "-479219712", "35880960", "320864256"};
const std::vector<std::string> PD3_P1 = {"108", "1512", "24282", "230094", "1072500", "3034020", "6713730", "7870578", "26737134", "253594938", "799267644", "1253301264", "1490308224", "1015581696", "-338632704", "-1179648", "160432128"};
const std::vector<std::string> PD4_P4 = {"1", "0", "19", "0", "314", "0", "512"};
const std::vector<std::string> PD4_P3 = {"-81", "0", "-1010", "0", "-1756", "0", "89408", "0", "114688"};
const std::vector<std::string> PD4_P2 = {"-1", "0", "-53", "0", "742", "0", "24896", "0", "117888", "0", "98304"};
const std::vector<std::string> PD4_P1 = {"1", "0", "53", "0", "2042", "0", "15616"};
const std::vector<std::string> F_Q0_bracket = {"8", "12", "26", "19", "32", "19", "26", "12", "8"};
const std::vector<std::string> F_P0 = {"2048", "13824", "-768", "-213760", "-1169344", "-3824384", "-9514544", "-19033912", "-34593136", "-55343916", "-89380041", "-133972232", "-203391640", "-281456218", "-371127411", "-433931810", "-463578366", "-430640772", "-354116927", "-242023980", "-134419668", "-46141730", "5123635", "26981054", "27467354", "19781548", "11072344", "5094288", "1787232", "526400", "69760", "17152", "3072", "2048"};
const std::vector<std::string> F_DK_bracket = {"32", "32", "100", "60", "93", "9", "22", "4", "8"};
const std::vector<std::string> F_DE_bracket = {"8", "-2", "17", "-10", "17", "-2", "8"};
const std::vector<std::string> F_P2_bracket = {"64", "0", "328", "596", "4434", "6621", "15377", "16897", "22822", "16897", "15377", "6621", "4434", "596", "328", "0", "64"};
const std::vector<std::string> F_P1_bracket = {"-1024", "-3840", "-17152", "-28608", "-28512", "49472", "123248", "343348", "197622", "312961", "-161991", "789433", "2315882", "7020790", "12653972", "19695118", "24357824", "26152837", "23711235", "18550693", "12444792", "6980836", "3351080", "1217888", "381504", "63552", "17792", "3840", "2048"};

} // namespace

namespace {

UniPoly<Rat> P(std::initializer_list<long> coeffs, char var = 'w') {
    std::vector<long> v(coeffs);
    return ipoly(var, v);
}

UniPoly<Rat> S(const std::vector<std::string>& coeffs, char var = 'w') {
    return spoly(var, coeffs);
}

UniPoly<Rat> prod(std::initializer_list<UniPoly<Rat>> fs) {
    UniPoly<Rat> r = UniPoly<Rat>::constant('w', Rat(1));
    for (const auto& f : fs) {
        r.var = f.var;
        r = r * f;
    }
    return r;
}

} // namespace

LinearODE<Rat> Y3_ode() {
    LinearODE<Rat> ode;
    ode.var = 'w';
    auto a2 = prod({P({0, 0, 1}), P({1, -1}), P({1, 3}), P({1, 0, -16}), P({1, 0, -16}),
                    P({1, -5}), P({1, 3, 4}), S(Y3_P2)});
    auto a1 = prod({P({1, 0, -16}), P({0, 1}), S(Y3_P1)});
    auto a0 = Rat(6) * S(Y3_P0);
    ode.a = {a0, a1, a2};
    return normalize_content(ode);
}

LinearODE<Rat> Y4_ode() {
    LinearODE<Rat> ode;
    ode.var = 'w';
    auto a2 = prod({P({1, 0, -16}), P({1, 0, -16}), P({1, 0, -4}),
                    P({1, 0, -20, 0, 16, 0, -16}), P({0, 0, 1}), S(Y4_P2)});
    auto a1 = prod({P({0, 2}), P({1, 0, -16}), S(Y4_P1)});
    auto a0 = Rat(8) * S(Y4_P0);
    ode.a = {a0, a1, a2};
    return normalize_content(ode);
}

LinearODE<Rat> Ytilde3_ode() {
    LinearODE<Rat> ode;
    ode.var = 'w';
    auto w = P({0, 1});
    auto m4 = P({1, -4}), p4 = P({1, 4});
    auto a6 = prod({P({1, -5}), P({1, 3}), P({1, 3, 4}), p4, p4, m4, m4, m4, m4,
                    P({1, -1}), w, w, w, w, w, w, S(YT3_P6)});
    // a5 = 2 (1+4w) (-1+4w)^3 w^5 P5
    auto m4neg = P({-1, 4});
    auto a5 = prod({P({0, 0, 0, 0, 0, 2}), p4, m4neg, m4neg, m4neg, S(YT3_P5)});
    auto a4 = prod({P({0, 0, 0, 0, 2}), m4, m4, S(YT3_P4)});
    auto a3 = prod({P({0, 0, 0, -4}), m4, S(YT3_P3)});
    auto a2 = prod({P({0, 0, 4}), S(YT3_P2)});
    auto a1 = prod({P({0, 8}), S(YT3_P1)});
    auto a0 = S(YT3_P0);
    ode.a = {a0, a1, a2, a3, a4, a5, a6};
    return normalize_content(ode);
}

LinearODE<Rat> phiD3_ode() {
    LinearODE<Rat> ode;
    ode.var = 'w';
    auto a4 = prod({P({1, -1}), P({1, 2}), P({1, -4}), P({1, 4}), P({1, 3, 4}),
                    P({0, 0, 1}), S(PD3_P4)});
    auto a3 = prod({P({0, 1}), S(PD3_P3)});
    ode.a = {UniPoly<Rat>('w'), S(PD3_P1), S(PD3_P2), a3, a4};
    return normalize_content(ode);
}

LinearODE<Rat> phiD4_ode() {
    LinearODE<Rat> ode;
    ode.var = 'w';
    auto a4 = prod({P({0, 0, 0, 1}), P({1, 4}), P({1, 2}), P({1, -2}), P({1, -4}), S(PD4_P4)});
    auto a3 = prod({P({0, 0, 0, 0, 2}), S(PD4_P3)});
    auto a2 = prod({P({0, 3}), S(PD4_P2)});
    auto a1 = Rat(3) * S(PD4_P1);
    ode.a = {UniPoly<Rat>('w'), a1, a2, a3, a4};
    return normalize_content(ode);
}

Y3ClosedForm y3_closed_form() {
    Y3ClosedForm cf;
    cf.num1 = S(Y3_F1_num);
    cf.den1 = prod({P({3}), P({1, -4}), P({1, -4}), P({1, -1}), P({1, 3}), P({1, 4}),
                    P({1, -5}), P({1, 3, 4})});
    cf.num2 = S(Y3_F2_num);
    cf.den2 = prod({P({1, -5}), P({1, 3, 4})});
    return cf;
}

UniPoly<Rat> Y5_R1() { return S(Y5_R1_coeffs); }
UniPoly<Rat> Y5_R2() { return S(Y5_R2_coeffs); }
UniPoly<Rat> Y5_Q1() { return prod({P({1, -3, 1}), P({1, 5, 5})}); }
UniPoly<Rat> Y5_Q2() {
    return prod({P({1, 5, 13}), P({1, -7, 5, -4}), P({1, -8, 20, -17}), P({1, 8, 20, 15, 4})});
}

UniPoly<Rat> Y3s_num() {
    UniPoly<Rat> b = S(Y3s_NY_bracket, 's');
    return shift_up(b, 6);
}
UniPoly<Rat> Y3s_den() {
    auto Q = [](std::initializer_list<long> c) { return ipoly('s', std::vector<long>(c)); };
    UniPoly<Rat> r = UniPoly<Rat>::constant('s', Rat(1));
    for (const auto& f :
         {Q({1, 0, 1}), Q({1, 0, 1}), Q({1, 1}), Q({1, 1}), Q({-1, 1}), Q({-1, 1}), Q({-1, 1}),
          Q({-1, 1}), Q({2, 3, 2}), Q({2, -1, 2}), Q({2, 1, 1}), Q({-2, 1})})
        r = r * f;
    return r;
}

Partition partition(int n) {
    auto w = P({0, 1});
    auto c16 = P({1, 0, -16});
    switch (n) {
    case 3:
        return {{P({1, -1}), P({1, 2}), c16, w}, {}, {P({1, 3, 4})}};
    case 4:
        return {{P({1, 0, -4}), c16, w}, {}, {}};
    case 5:
        return {{P({1, 1}), c16, P({1, -3, 1}), P({1, 2, -4}), w},
                {P({1, -1}), P({1, 2})},
                {P({1, -1, -3, 4}), P({1, 8, 20, 15, 4})}};
    case 6:
        return {{P({1, 0, -1}), c16, P({1, 0, -4}), P({1, 0, -9}), w},
                {},
                {P({1, 0, -10, 0, 29})}};
    case 7:
        return {{w, c16, P({1, -5, 6, -1}), P({1, 2, -8, -8}), P({1, 2, -1, -1})},
                {P({1, 1}), P({1, -3, 1}), P({1, 2, -4})},
                {P({1, 12, 54, 112, 105, 35, 4}),
                 P({1, -3, -10, 35, 5, -62, 17, 32, -16})}};
    case 8:
        return {{w, c16, P({1, 0, -4}), P({1, 0, -2}), P({1, 0, -8}), P({1, 4, 2}), P({1, -4, 2})},
                {P({1, 0, -1}), P({1, 0, -9})},
                {P({1, 0, -26, 0, 242, 0, -960, 0, 1685, 0, -1138})}};
    default:
        throw std::invalid_argument("partition fixture: n out of range");
    }
}

std::vector<UniPoly<Rat>> physical_list(int n) {
    switch (n) {
    case 3: return {P({1, -4}), P({1, 2}), P({1, -1})};
    case 4: return {P({1, -4}), P({1, 4}), P({1, 2}), P({1, -2})};
    case 5: return {P({1, -4}), P({1, 1}), P({1, 2, -4}), P({1, -3, 1})};
    case 6: return {P({1, -4}), P({1, 4}), P({1, 0, -1}), P({1, 0, -9}), P({1, 0, -4})};
    case 7: return {P({1, -4}), P({1, -5, 6, -1}), P({1, 2, -8, -8}), P({1, 2, -1, -1})};
    case 8:
        return {P({1, -4}), P({1, 4}), P({1, 0, -2}), P({1, 0, -8}), P({1, 0, -4}),
                P({1, 0, -9}), P({1, -4, 2}), P({1, 4, 2})};
    default:
        throw std::invalid_argument("physical fixture: n out of range");
    }
}

std::vector<UniPoly<Rat>> branch_extra_list(int n) {
    switch (n) {
    case 3: return {P({1, 3}), P({1, -5}), P({1, -1, -4})};
    case 4:
        return {P({1, 3, -1}), P({1, -3, -1}), P({1, 6, 8, 4}), P({1, -6, 8, -4})};
    case 5:
        return {P({1, 3}), P({-1, -1, 3, 4}), P({1, 5, 5}),
                P({1, 0, -16, -2, 56, -16, -63, 8, 16}), P({-1, 8, -20, 17})};
    default:
        throw std::invalid_argument("branch extra fixture: n out of range");
    }
}

DiffOp<Rat> opL1() {
    auto Q = [](std::initializer_list<long> c) { return ipoly('s', std::vector<long>(c)); };
    UniPoly<Rat> Q1 = UniPoly<Rat>::constant('s', Rat(1));
    for (const auto& f : {Q({1, 0, 1}), Q({1, 1, 1}), Q({2, -1, 2}), Q({1, 1, 2}), Q({2, 1, 1}),
                          Q({2, 1, 2})})
        Q1 = Q1 * f;
    UniPoly<Rat> Q0 = Q({-1, 0, 1}) * S(F_Q0_bracket, 's');
    DiffOp<Rat> L;
    L.var = 's';
    L.c = {RatFun<Rat>(Rat(-1, 2) * Q0, Q1), RatFun<Rat>::constant('s', Rat(1))};
    return L;
}

DiffOp<Rat> opL2() {
    auto Q = [](std::initializer_list<long> c) { return ipoly('s', std::vector<long>(c)); };
    UniPoly<Rat> P2 = Q({0, 1});
    for (const auto& f : {Q({1, 0, 1}), Q({2, 1, 2}), Q({2, 1, 2}), Q({-1, 0, 1}), Q({-1, 0, 1}),
                          Q({2, 1, 1}), Q({1, 1, 2}), Q({1, 1, 1}), Q({2, -1, 2})})
        P2 = P2 * f;
    P2 = P2 * S(F_P2_bracket, 's');
    UniPoly<Rat> P1 = Q({-1, 0, 1}) * Q({2, 1, 2}) * Q({1, 0, 1}) * S(F_P1_bracket, 's');
    UniPoly<Rat> P0 = S(F_P0, 's');
    DiffOp<Rat> L;
    L.var = 's';
    L.c = {RatFun<Rat>(P0, P2), RatFun<Rat>(P1, P2), RatFun<Rat>::constant('s', Rat(1))};
    return L;
}

UniPoly<Rat> D0() {
    auto Q = [](std::initializer_list<long> c) { return ipoly('s', std::vector<long>(c)); };
    UniPoly<Rat> r = Q({0, 1});
    for (const auto& f : {Q({-1, 1}), Q({1, 1}), Q({1, 0, 1}), Q({2, 1, 2}), Q({2, -1, 2}),
                          Q({1, 1, 1}), Q({2, 1, 1}), Q({1, 1, 2})})
        r = r * f;
    return r;
}
UniPoly<Rat> DK() {
    auto Q = [](std::initializer_list<long> c) { return ipoly('s', std::vector<long>(c)); };
    UniPoly<Rat> r = Q({-1, 1});
    for (const auto& f : {Q({1, 1}), Q({1, 1}), Q({1, 0, 1}), Q({1, 0, 1})})
        r = r * f;
    return r * S(F_DK_bracket, 's');
}
UniPoly<Rat> DE() {
    auto Q = [](std::initializer_list<long> c) { return ipoly('s', std::vector<long>(c)); };
    UniPoly<Rat> r = Q({2});
    for (const auto& f : {Q({1, 0, 1}), Q({1, 1}), Q({1, 1}), Q({2, 1, 2})})
        r = r * f;
    return r * S(F_DE_bracket, 's');
}

std::vector<AmplitudeFixture> phiD3_amplitudes() {
    // values as printed: -1/(4 pi) ln, -5/(8 pi) x ln, i/sqrt6, i/sqrt3,
    // 3i/(4 pi) x ln, b1 = 0, and in s: b2 = (1+i) 7^(-1/4)/2
    return {
        {"1/4", "log", Rat(-1, 4), Rat(0), -1, 0},
        {"-1/4", "xlog", Rat(-5, 8), Rat(0), -1, 0},
        {"1", "xm12", Rat(0), Rat(1), 0, 0},      // i/sqrt6: stored as i * (1/sqrt6) via kind
        {"-1/2", "xm12", Rat(0), Rat(1), 0, 0},   // i/sqrt3
        {"inf", "xlog", Rat(0), Rat(3, 4), -1, 0},
        {"w1", "xm12", Rat(0), Rat(0), 0, 0},     // b1 = 0
        {"s2", "xm12", Rat(1, 2), Rat(1, 2), 0, -1}, // (1+i) 7^(-1/4) / 2
        {"s1", "xm12", Rat(0), Rat(0), 0, 0},     // b1 = 0 in s as well
    };
}

Rat y3_at_one_fifth() { return Rat(37, 1100); }
QuadExt y3_at_w0_upper() { return QuadExt(Rat(4099, 90112), Rat(3881, 90112), Rat(-7)); }

UniPoly<Rat> phiD5_s_selfdual() { return ipoly('s', {4, -2, 9, -2, 9, -2, 4}); }
UniPoly<Rat> phiD5_s_singular() { return ipoly('s', {4, 6, 7, 5, 2}); }
UniPoly<Rat> phiD5_s_regular() { return ipoly('s', {2, 5, 7, 6, 4}); }
UniPoly<Rat> phiD6_s_factor() { return ipoly('s', {16, 0, 24, 0, 45, 0, 24, 0, 16}); }

} // namespace fixtures
} // namespace icl
