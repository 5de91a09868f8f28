// (alpha, beta, gamma, re z, im z, re E, im E) from a 40-digit series summation.
const CASES: &[[f64; 7]] = &[
    [0.3, 1.0, 1.0, -0.5, 6.123233995736766e-17, 0.6326490059435991, 2.934182296032009e-17],
    [0.3, 1.0, 1.0, -0.3686968577706227, 0.3377315902755755, 0.6535244697756848, 0.18461323523050432],
    [0.3, 1.0, 1.0, -0.16164478343175168, -0.47315004384370724, 0.7030867401094351, -0.33162436211376056],
    [0.3, 1.0, 1.0, 0.5, 0.0, 2.0620157899559994, 0.0],
    [0.3, 1.0, 1.0, -3.0, 3.6739403974420594e-16, 0.21180263319643577, 2.1116972262573946e-17],
    [0.3, 1.0, 1.0, -2.2121811466237364, 2.0263895416534528, 0.18142272751051858, 0.12739038446896578],
    [0.3, 1.0, 1.0, -0.96986870059051, -2.8389002630622433, 0.11887539857057643, -0.20850383952187043],
    [0.3, 1.0, 1.0, 3.0, 0.0, 2.7203610806251024e+17, 0.0],
    [0.3, 0.3, 1.0, -0.5, 6.123233995736766e-17, 0.14375650014722127, 1.2534624073793659e-17],
    [0.3, 0.3, 1.0, -0.3686968577706227, 0.3377315902755755, 0.1437133528766038, 0.08134266366754339],
    [0.3, 0.3, 1.0, -0.16164478343175168, -0.47315004384370724, 0.14702982790085498, -0.1562403108332229],
    [0.3, 0.3, 1.0, 0.5, 0.0, 1.1694769581219358, 0.0],
    [0.3, 0.3, 1.0, -3.0, 3.6739403974420594e-16, 0.017243316421744134, 3.3977538099875316e-18],
    [0.3, 0.3, 1.0, -2.2121811466237364, 2.0263895416534528, 0.006690399677226817, 0.017796861399650227],
    [0.3, 0.3, 1.0, -0.96986870059051, -2.8389002630622433, -0.011163199048738333, -0.019620226588666762],
    [0.3, 0.3, 1.0, 3.0, 0.0, 3.531095639651297e+18, 0.0],
    [0.3, 1.3, 2.0, -0.5, 6.123233995736766e-17, 0.47918833382407094, 4.1782080245978866e-17],
    [0.3, 1.3, 2.0, -0.3686968577706227, 0.3377315902755755, 0.47904450958867945, 0.2711422122251447],
    [0.3, 1.3, 2.0, -0.16164478343175168, -0.47315004384370724, 0.4900994263361833, -0.520801036110743],
    [0.3, 1.3, 2.0, 0.5, 0.0, 3.8982565270731193, 0.0],
    [0.3, 1.3, 2.0, -3.0, 3.6739403974420594e-16, 0.05747772140581379, 1.1325846033291772e-17],
    [0.3, 1.3, 2.0, -2.2121811466237364, 2.0263895416534528, 0.022301332257422726, 0.05932287133216743],
    [0.3, 1.3, 2.0, -0.96986870059051, -2.8389002630622433, -0.037210663495794445, -0.06540075529555588],
    [0.3, 1.3, 2.0, 3.0, 0.0, 1.1770318798837654e+19, 0.0],
    [0.3, 0.6, 2.0, -0.5, 6.123233995736766e-17, 0.20470594595144906, 2.5468338546235026e-17],
    [0.3, 0.6, 2.0, -0.3686968577706227, 0.3377315902755755, 0.186556719911578, 0.16767868723353405],
    [0.3, 0.6, 2.0, -0.16164478343175168, -0.47315004384370724, 0.14969321154660933, -0.33496905992604714],
    [0.3, 0.6, 2.0, 0.5, 0.0, 3.6610085875435727, 0.0],
    [0.3, 0.6, 2.0, -3.0, 3.6739403974420594e-16, 0.009248255122356313, 2.7038191551410004e-18],
    [0.3, 0.6, 2.0, -2.2121811466237364, 2.0263895416534528, -0.0024369714712233616, 0.010519815888018636],
    [0.3, 0.6, 2.0, -0.96986870059051, -2.8389002630622433, -0.01420732009855388, -0.0004967595275510475],
    [0.3, 0.6, 2.0, 3.0, 0.0, 1.555280427897722e+20, 0.0],
    [0.3, 1.0, 2.0, -0.5, 6.123233995736766e-17, 0.3930548390315636, 3.779260579765075e-17],
    [0.3, 1.0, 2.0, -0.3686968577706227, 0.3377315902755755, 0.38532897383243403, 0.246432417610286],
    [0.3, 1.0, 2.0, -0.16164478343175168, -0.47315004384370724, 0.3774476914096507, -0.47933015647934857],
    [0.3, 1.0, 2.0, 0.5, 0.0, 4.0111440534925595, 0.0],
    [0.3, 1.0, 2.0, -3.0, 3.6739403974420594e-16, 0.03936946897899443, 8.256406425272574e-18],
    [0.3, 1.0, 2.0, -2.2121811466237364, 2.0263895416534528, 0.011876894697698743, 0.04134863339573946],
    [0.3, 1.0, 2.0, -0.96986870059051, -2.8389002630622433, -0.03070136498966966, -0.03943633157880027],
    [0.3, 1.0, 2.0, 3.0, 0.0, 3.5582992504575476e+19, 0.0],
    [0.5, 1.0, 1.0, -0.5, 6.123233995736766e-17, 0.6156903441929259, 3.139313629631385e-17],
    [0.5, 1.0, 1.0, -0.3686968577706227, 0.3377315902755755, 0.6393486063816266, 0.19816757501667703],
    [0.5, 1.0, 1.0, -0.16164478343175168, -0.47315004384370724, 0.6982079731324529, -0.35678771488000377],
    [0.5, 1.0, 1.0, 0.5, 0.0, 1.952360489182557, 0.0],
    [0.5, 1.0, 1.0, -3.0, 3.6739403974420594e-16, 0.17900115118138996, 1.997604425405757e-17],
    [0.5, 1.0, 1.0, -2.2121811466237364, 2.0263895416534528, 0.14350047842743918, 0.11822914931583457],
    [0.5, 1.0, 1.0, -0.96986870059051, -2.8389002630622433, 0.0715305552448462, -0.18302328981260113],
    [0.5, 1.0, 1.0, 3.0, 0.0, 16205.988853999586, 0.0],
    [0.5, 1.0, 1.0, -8.0, 9.797174393178826e-16, 0.06998516620088092, 8.441743037444932e-18],
    [0.5, 1.0, 1.0, -5.8991497243299635, 5.403705444409208, 0.052327809411167776, 0.04719240444349732],
    [0.5, 1.0, 1.0, -2.586316534908027, -7.570400701499316, 0.023272729711671738, -0.06703865364763287],
    [0.5, 1.0, 1.0, 8.0, 0.0, 1.2470298161623233e+28, 0.0],
    [0.5, 1.0, 1.0, -25.0, 3.061616997868383e-15, 0.02254957243264136, 2.7571252982353297e-18],
    [0.5, 1.0, 1.0, -18.434842888531136, 16.886579513778774, 0.01665214070353683, 0.015229219593569154],
    [0.5, 1.0, 1.0, -8.082239171587585, -23.657502192185362, 0.007310977540165007, -0.021365644835554365],
    [0.5, 1.0, 1.0, 25.0, 0.0, 5.4335189393274735e+271, 0.0],
    [0.5, 0.5, 1.0, -0.5, 6.123233995736766e-17, 0.25634441145129333, 2.2003592315933018e-17],
    [0.5, 0.5, 1.0, -0.3686968577706227, 0.3377315902755755, 0.2615363111033871, 0.14286445935306671],
    [0.5, 0.5, 1.0, -0.16164478343175168, -0.47315004384370724, 0.2825137840020688, -0.27268426019675823],
    [0.5, 0.5, 1.0, 0.5, 0.0, 1.5403698281390348, 0.0],
    [0.5, 0.5, 1.0, -3.0, 3.6739403974420594e-16, 0.027186130003586436, 5.8358232892214886e-18],
    [0.5, 0.5, 1.0, -2.2121811466237364, 2.0263895416534528, 0.00716221894689745, 0.02924357360977782],
    [0.5, 0.5, 1.0, -0.96986870059051, -2.8389002630622433, -0.024770528715590913, -0.025559551833234422],
    [0.5, 0.5, 1.0, 3.0, 0.0, 48618.53075158231, 0.0],
    [0.5, 0.5, 1.0, -8.0, 9.797174393178826e-16, 0.004308253940708866, 1.0317435210040296e-18],
    [0.5, 0.5, 1.0, -5.8991497243299635, 5.403705444409208, 0.0004861482589872856, 0.0043690089458093126],
    [0.5, 0.5, 1.0, -2.586316534908027, -7.570400701499316, -0.003510532719595209, -0.0028007109281984873],
    [0.5, 0.5, 1.0, 8.0, 0.0, 9.976238529298587e+28, 0.0],
    [0.5, 0.5, 1.0, -25.0, 3.061616997868383e-15, 0.00045027273172231337, 1.100217985558452e-19],
    [0.5, 0.5, 1.0, -18.434842888531136, 16.886579513778774, 4.0558320737299926e-05, 0.0004494275425192899],
    [0.5, 0.5, 1.0, -8.082239171587585, -23.657502192185362, -0.00035727504454358323, -0.0002772155673261416],
    [0.5, 0.5, 1.0, 25.0, 0.0, 1.3583797348318683e+273, 0.0],
    [0.5, 1.5, 2.0, -0.5, 6.123233995736766e-17, 0.5126888229025867, 4.4007184631866035e-17],
    [0.5, 1.5, 2.0, -0.3686968577706227, 0.3377315902755755, 0.5230726222067742, 0.28572891870613343],
    [0.5, 1.5, 2.0, -0.16164478343175168, -0.47315004384370724, 0.5650275680041376, -0.5453685203935165],
    [0.5, 1.5, 2.0, 0.5, 0.0, 3.0807396562780696, 0.0],
    [0.5, 1.5, 2.0, -3.0, 3.6739403974420594e-16, 0.05437226000717287, 1.1671646578442977e-17],
    [0.5, 1.5, 2.0, -2.2121811466237364, 2.0263895416534528, 0.0143244378937949, 0.05848714721955564],
    [0.5, 1.5, 2.0, -0.96986870059051, -2.8389002630622433, -0.049541057431181826, -0.051119103666468844],
    [0.5, 1.5, 2.0, 3.0, 0.0, 97237.06150316462, 0.0],
    [0.5, 1.5, 2.0, -8.0, 9.797174393178826e-16, 0.008616507881417731, 2.0634870420080593e-18],
    [0.5, 1.5, 2.0, -5.8991497243299635, 5.403705444409208, 0.0009722965179745712, 0.008738017891618625],
    [0.5, 1.5, 2.0, -2.586316534908027, -7.570400701499316, -0.007021065439190418, -0.005601421856396975],
    [0.5, 1.5, 2.0, 8.0, 0.0, 1.9952477058597174e+29, 0.0],
    [0.5, 1.5, 2.0, -25.0, 3.061616997868383e-15, 0.0009005454634446267, 2.200435971116904e-19],
    [0.5, 1.5, 2.0, -18.434842888531136, 16.886579513778774, 8.111664147459985e-05, 0.0008988550850385797],
    [0.5, 1.5, 2.0, -8.082239171587585, -23.657502192185362, -0.0007145500890871665, -0.0005544311346522832],
    [0.5, 1.5, 2.0, 25.0, 0.0, 2.7167594696637365e+273, 0.0],
    [0.5, 1.0, 2.0, -0.5, 6.123233995736766e-17, 0.3593459327416325, 4.0782680276694687e-17],
    [0.5, 1.0, 2.0, -0.3686968577706227, 0.3377315902755755, 0.34999369208580583, 0.26947836904303707],
    [0.5, 1.0, 2.0, -0.16164478343175168, -0.47315004384370724, 0.3488330749342846, -0.5359745570845599],
    [0.5, 1.0, 2.0, 0.5, 0.0, 3.492730317321592, 0.0],
    [0.5, 1.0, 2.0, -3.0, 3.6739403974420594e-16, 0.015884371159871336, 4.937148772786208e-18],
    [0.5, 1.0, 2.0, -2.2121811466237364, 2.0263895416534528, -0.006705516464049871, 0.0178718760549771],
    [0.5, 1.0, 2.0, -0.96986870059051, -2.8389002630622433, -0.025543160604738147, 0.00719764980951239],
    [0.5, 1.0, 2.0, 3.0, 0.0, 307917.1733634934, 0.0],
    [0.5, 1.0, 2.0, -8.0, 9.797174393178826e-16, 0.001053103149539085, 3.7558973882539084e-19],
    [0.5, 1.0, 2.0, -5.8991497243299635, 5.403705444409208, -0.0006255881790935319, 0.0008995325947243235],
    [0.5, 1.0, 2.0, -2.586316534908027, -7.570400701499316, -0.0009735806013400498, 0.0006006750446815831],
    [0.5, 1.0, 2.0, 8.0, 0.0, 1.6086684628493972e+30, 0.0],
    [0.5, 1.0, 2.0, -25.0, 3.061616997868383e-15, 3.5935846525691044e-05, 1.3160668678400393e-20],
    [0.5, 1.0, 2.0, -18.434842888531136, 16.886579513778774, -2.1819702561086438e-05, 2.8749937477158056e-05],
    [0.5, 1.0, 2.0, -8.082239171587585, -23.657502192185362, -3.0313523205505074e-05, 1.987049788595608e-05],
    [0.5, 1.0, 2.0, 25.0, 0.0, 6.797332193098669e+274, 0.0],
    [0.5, 1.0, 2.0, -0.5, 6.123233995736766e-17, 0.3593459327416325, 4.0782680276694687e-17],
    [0.5, 1.0, 2.0, -0.3686968577706227, 0.3377315902755755, 0.34999369208580583, 0.26947836904303707],
    [0.5, 1.0, 2.0, -0.16164478343175168, -0.47315004384370724, 0.3488330749342846, -0.5359745570845599],
    [0.5, 1.0, 2.0, 0.5, 0.0, 3.492730317321592, 0.0],
    [0.5, 1.0, 2.0, -3.0, 3.6739403974420594e-16, 0.015884371159871336, 4.937148772786208e-18],
    [0.5, 1.0, 2.0, -2.2121811466237364, 2.0263895416534528, -0.006705516464049871, 0.0178718760549771],
    [0.5, 1.0, 2.0, -0.96986870059051, -2.8389002630622433, -0.025543160604738147, 0.00719764980951239],
    [0.5, 1.0, 2.0, 3.0, 0.0, 307917.1733634934, 0.0],
    [0.5, 1.0, 2.0, -8.0, 9.797174393178826e-16, 0.001053103149539085, 3.7558973882539084e-19],
    [0.5, 1.0, 2.0, -5.8991497243299635, 5.403705444409208, -0.0006255881790935319, 0.0008995325947243235],
    [0.5, 1.0, 2.0, -2.586316534908027, -7.570400701499316, -0.0009735806013400498, 0.0006006750446815831],
    [0.5, 1.0, 2.0, 8.0, 0.0, 1.6086684628493972e+30, 0.0],
    [0.5, 1.0, 2.0, -25.0, 3.061616997868383e-15, 3.5935846525691044e-05, 1.3160668678400393e-20],
    [0.5, 1.0, 2.0, -18.434842888531136, 16.886579513778774, -2.1819702561086438e-05, 2.8749937477158056e-05],
    [0.5, 1.0, 2.0, -8.082239171587585, -23.657502192185362, -3.0313523205505074e-05, 1.987049788595608e-05],
    [0.5, 1.0, 2.0, 25.0, 0.0, 6.797332193098669e+274, 0.0],
    [0.6, 1.0, 1.0, -0.5, 6.123233995736766e-17, 0.6094758219562, 3.25779596313268e-17],
    [0.6, 1.0, 1.0, -0.3686968577706227, 0.3377315902755755, 0.6359498228086209, 0.2056094364834904],
    [0.6, 1.0, 1.0, -0.16164478343175168, -0.47315004384370724, 0.7025279926227791, -0.3686495388305636],
    [0.6, 1.0, 1.0, 0.5, 0.0, 1.8886847280930528, 0.0],
    [0.6, 1.0, 1.0, -3.0, 3.6739403974420594e-16, 0.1597034802650912, 1.9406932858011045e-17],
    [0.6, 1.0, 1.0, -2.2121811466237364, 2.0263895416534528, 0.11999428986081197, 0.11299790367695921],
    [0.6, 1.0, 1.0, -0.96986870059051, -2.8389002630622433, 0.03975413889516362, -0.1646755990071321],
    [0.6, 1.0, 1.0, 3.0, 0.0, 854.8506112648105, 0.0],
    [0.6, 1.0, 1.0, -8.0, 9.797174393178826e-16, 0.05860974263633204, 7.392132793420896e-18],
    [0.6, 1.0, 1.0, -5.8991497243299635, 5.403705444409208, 0.0420856033485793, 0.040447430728167824],
    [0.6, 1.0, 1.0, -2.586316534908027, -7.570400701499316, 0.016357610558975055, -0.055250116353894964],
    [0.6, 1.0, 1.0, 8.0, 0.0, 131604933637801.66, 0.0],
    [0.6, 1.0, 1.0, -25.0, 3.061616997868383e-15, 0.018295717331791216, 2.271157478143005e-18],
    [0.6, 1.0, 1.0, -18.434842888531136, 16.886579513778774, 0.013329178745908634, 0.012445387587471825],
    [0.6, 1.0, 1.0, -8.082239171587585, -23.657502192185362, 0.005621534161521178, -0.017239852126665872],
    [0.6, 1.0, 1.0, 25.0, 0.0, 1.1245751387774038e+93, 0.0],
    [0.6, 0.6, 1.0, -0.5, 6.123233995736766e-17, 0.31922307382676063, 2.6581619551029815e-17],
    [0.6, 0.6, 1.0, -0.3686968577706227, 0.3377315902755755, 0.3303195169215051, 0.17194228230552502],
    [0.6, 0.6, 1.0, -0.16164478343175168, -0.47315004384370724, 0.36765080006004636, -0.3237544082449194],
    [0.6, 0.6, 1.0, 0.5, 0.0, 1.627332275119611, 0.0],
    [0.6, 0.6, 1.0, -3.0, 3.6739403974420594e-16, 0.03169392656155703, 7.235703817621114e-18],
    [0.6, 0.6, 1.0, -2.2121811466237364, 2.0263895416534528, 0.005054343133841777, 0.035140443393410103],
    [0.6, 0.6, 1.0, -0.96986870059051, -2.8389002630622433, -0.03633047567686064, -0.02267181578962067],
    [0.6, 0.6, 1.0, 3.0, 0.0, 1778.4496950494458, 0.0],
    [0.6, 0.6, 1.0, -8.0, 9.797174393178826e-16, 0.00452710087424855, 1.130546216001898e-18],
    [0.6, 0.6, 1.0, -5.8991497243299635, 5.403705444409208, 0.00022460353434918936, 0.004529307213573683],
    [0.6, 0.6, 1.0, -2.586316534908027, -7.570400701499316, -0.003727640869766745, -0.0024417266397814964],
    [0.6, 0.6, 1.0, 8.0, 0.0, 526419734551206.9, 0.0],
    [0.6, 0.6, 1.0, -25.0, 3.061616997868383e-15, 0.0004450897966122359, 1.1040107134794946e-19],
    [0.6, 0.6, 1.0, -18.434842888531136, 16.886579513778774, 3.071166708929382e-05, 0.0004415113844415948],
    [0.6, 0.6, 1.0, -8.082239171587585, -23.657502192185362, -0.0003536309265948078, -0.00025832598935777957],
    [0.6, 0.6, 1.0, 25.0, 0.0, 9.614982187699845e+93, 0.0],
    [0.6, 1.6, 2.0, -0.5, 6.123233995736766e-17, 0.5320384563779343, 4.4302699251716356e-17],
    [0.6, 1.6, 2.0, -0.3686968577706227, 0.3377315902755755, 0.5505325282025085, 0.2865704705092084],
    [0.6, 1.6, 2.0, -0.16164478343175168, -0.47315004384370724, 0.6127513334334106, -0.539590680408199],
    [0.6, 1.6, 2.0, 0.5, 0.0, 2.7122204585326855, 0.0],
    [0.6, 1.6, 2.0, -3.0, 3.6739403974420594e-16, 0.052823210935928386, 1.2059506362701858e-17],
    [0.6, 1.6, 2.0, -2.2121811466237364, 2.0263895416534528, 0.008423905223069635, 0.05856740565568351],
    [0.6, 1.6, 2.0, -0.96986870059051, -2.8389002630622433, -0.06055079279476773, -0.0377863596493678],
    [0.6, 1.6, 2.0, 3.0, 0.0, 2964.0828250824093, 0.0],
    [0.6, 1.6, 2.0, -8.0, 9.797174393178826e-16, 0.0075451681237475865, 1.8842436933364973e-18],
    [0.6, 1.6, 2.0, -5.8991497243299635, 5.403705444409208, 0.00037433922391531604, 0.00754884535595614],
    [0.6, 1.6, 2.0, -2.586316534908027, -7.570400701499316, -0.0062127347829445765, -0.004069544399635829],
    [0.6, 1.6, 2.0, 8.0, 0.0, 877366224252011.1, 0.0],
    [0.6, 1.6, 2.0, -25.0, 3.061616997868383e-15, 0.0007418163276870601, 1.8400178557991582e-19],
    [0.6, 1.6, 2.0, -18.434842888531136, 16.886579513778774, 5.118611181548973e-05, 0.0007358523074026582],
    [0.6, 1.6, 2.0, -8.082239171587585, -23.657502192185362, -0.0005893848776580131, -0.0004305433155962994],
    [0.6, 1.6, 2.0, 25.0, 0.0, 1.6024970312833068e+94, 0.0],
    [0.6, 1.2, 2.0, -0.5, 6.123233995736766e-17, 0.43411079128344554, 4.5529847301063504e-17],
    [0.6, 1.2, 2.0, -0.3686968577706227, 0.3377315902755755, 0.437925802506347, 0.2993408512754463],
    [0.6, 1.2, 2.0, -0.16164478343175168, -0.47315004384370724, 0.4733399727091146, -0.5838647083495719],
    [0.6, 1.2, 2.0, 0.5, 0.0, 3.1327183483212937, 0.0],
    [0.6, 1.2, 2.0, -3.0, 3.6739403974420594e-16, 0.019694668489066654, 6.3698996874200835e-18],
    [0.6, 1.2, 2.0, -2.2121811466237364, 2.0263895416534528, -0.010797064989262452, 0.022163442619735504],
    [0.6, 1.2, 2.0, -0.96986870059051, -2.8389002630622433, -0.03363799277697537, 0.019878630428576252],
    [0.6, 1.2, 2.0, 3.0, 0.0, 6560.6613194519805, 0.0],
    [0.6, 1.2, 2.0, -8.0, 9.797174393178826e-16, 0.0011539513033360193, 4.2786575188315563e-19],
    [0.6, 1.2, 2.0, -5.8991497243299635, 5.403705444409208, -0.0007528119661513502, 0.0009014455670380757],
    [0.6, 1.2, 2.0, -2.586316534908027, -7.570400701499316, -0.0008905924215512304, 0.0007422004695518216],
    [0.6, 1.2, 2.0, 8.0, 0.0, 3553333208220647.0, 0.0],
    [0.6, 1.2, 2.0, -25.0, 3.061616997868383e-15, 3.605972642065124e-05, 1.3403876591031386e-20],
    [0.6, 1.2, 2.0, -18.434842888531136, 16.886579513778774, -2.2508674759795556e-05, 2.7842118157789853e-05],
    [0.6, 1.2, 2.0, -8.082239171587585, -23.657502192185362, -2.8638266918164762e-05, 2.0606393201750018e-05],
    [0.6, 1.2, 2.0, 25.0, 0.0, 1.3726796843076888e+95, 0.0],
    [0.6, 1.0, 2.0, -0.5, 6.123233995736766e-17, 0.3434565937672328, 4.300456963679542e-17],
    [0.6, 1.0, 2.0, -0.3686968577706227, 0.3377315902755755, 0.33618630882874445, 0.28588403072516266],
    [0.6, 1.0, 2.0, -0.16164478343175168, -0.47315004384370724, 0.34817258193962314, -0.571350840433497],
    [0.6, 1.0, 2.0, 0.5, 0.0, 3.2447949573593955, 0.0],
    [0.6, 1.0, 2.0, -3.0, 3.6739403974420594e-16, 0.0012338474573060823, 2.635346627916519e-18],
    [0.6, 1.0, 2.0, -2.2121811466237364, 2.0263895416534528, -0.017321292757060222, 0.0005063065226999603],
    [0.6, 1.0, 2.0, -0.96986870059051, -2.8389002630622433, -0.00879124872600453, 0.0438698701197394],
    [0.6, 1.0, 2.0, 3.0, 0.0, 9747.09908651204, 0.0],
    [0.6, 1.0, 2.0, -8.0, 9.797174393178826e-16, -0.0017516023536486352, -2.896839598501834e-19],
    [0.6, 1.0, 2.0, -5.8991497243299635, 5.403705444409208, -0.0009144165299699784, -0.00206151937010324],
    [0.6, 1.0, 2.0, -2.586316534908027, -7.570400701499316, 0.0016176274773171595, 0.0023079053754583444],
    [0.6, 1.0, 2.0, 8.0, 0.0, 7150534727653894.0, 0.0],
    [0.6, 1.0, 2.0, -25.0, 3.061616997868383e-15, -0.0002496908603852807, -5.772968321188505e-20],
    [0.6, 1.0, 2.0, -18.434842888531136, 16.886579513778774, -4.045768283727052e-05, -0.00025557574148585407],
    [0.6, 1.0, 2.0, -8.082239171587585, -23.657502192185362, 0.0001995042743199215, 0.00018327595894707555],
    [0.6, 1.0, 2.0, 25.0, 0.0, 4.017488329596043e+95, 0.0],
    [0.75, 1.0, 1.0, -0.5, 6.123233995736766e-17, 0.6037903450952468, 3.4440522513971106e-17],
    [0.75, 1.0, 1.0, -0.3686968577706227, 0.3377315902755755, 0.636359178500463, 0.21647467882954677],
    [0.75, 1.0, 1.0, -0.16164478343175168, -0.47315004384370724, 0.7171798181968104, -0.3824447114744329],
    [0.75, 1.0, 1.0, 0.5, 0.0, 1.7937773945015028, 0.0],
    [0.75, 1.0, 1.0, -3.0, 3.6739403974420594e-16, 0.12585513691184153, 1.8574554811451238e-17],
    [0.75, 1.0, 1.0, -2.2121811466237364, 2.0263895416534528, 0.07546525603351786, 0.10382976223684592],
    [0.75, 1.0, 1.0, -0.96986870059051, -2.8389002630622433, -0.03383467155225263, -0.12065722824062781],
    [0.75, 1.0, 1.0, 3.0, 0.0, 100.86180177510028, 0.0],
    [0.75, 1.0, 1.0, -8.0, 9.797174393178826e-16, 0.039335854041138194, 5.4541175681526596e-18],
    [0.75, 1.0, 1.0, -5.8991497243299635, 5.403705444409208, 0.025534423787001218, 0.028108468280565426],
    [0.75, 1.0, 1.0, -2.586316534908027, -7.570400701499316, 0.007209115408851115, -0.035035146605704504],
    [0.75, 1.0, 1.0, 8.0, 0.0, 11848147.330129508, 0.0],
    [0.75, 1.0, 1.0, -25.0, 3.061616997868383e-15, 0.0115001807871696, 1.4675779401541673e-18],
    [0.75, 1.0, 1.0, -18.434842888531136, 16.886579513778774, 0.008165042772799102, 0.007914777500207679],
    [0.75, 1.0, 1.0, -8.082239171587585, -23.657502192185362, 0.0031959984771128412, -0.010707343611827623],
    [0.75, 1.0, 1.0, 25.0, 0.0, 7.44831360451736e+31, 0.0],
    [0.75, 0.75, 1.0, -0.5, 6.123233995736766e-17, 0.42184231246858206, 3.245649065004164e-17],
    [0.75, 0.75, 1.0, -0.3686968577706227, 0.3377315902755755, 0.4455625826193164, 0.2073563478615321],
    [0.75, 0.75, 1.0, -0.16164478343175168, -0.47315004384370724, 0.512379672395022, -0.3775811494915833],
    [0.75, 0.75, 1.0, 0.5, 0.0, 1.6807270339672675, 0.0],
    [0.75, 0.75, 1.0, -3.0, 3.6739403974420594e-16, 0.03791818756310711, 9.862510875702502e-18],
    [0.75, 0.75, 1.0, -2.2121811466237364, 2.0263895416534528, -0.004221091972265781, 0.04551123319846937],
    [0.75, 0.75, 1.0, -0.96986870059051, -2.8389002630622433, -0.0800491046116458, 0.0006078074075362956],
    [0.75, 0.75, 1.0, 3.0, 0.0, 145.57961543706037, 0.0],
    [0.75, 0.75, 1.0, -8.0, 9.797174393178826e-16, 0.004175273412467294, 1.145698344894906e-18],
    [0.75, 0.75, 1.0, -5.8991497243299635, 5.403705444409208, -0.00036011656248087677, 0.0039233307875117815],
    [0.75, 0.75, 1.0, -2.586316534908027, -7.570400701499316, -0.0032131434258662987, -0.0013684833512473042],
    [0.75, 0.75, 1.0, 8.0, 0.0, 23696294.723891705, 0.0],
    [0.75, 0.75, 1.0, -25.0, 3.061616997868383e-15, 0.00035951049915190704, 9.172157549522374e-20],
    [0.75, 0.75, 1.0, -18.434842888531136, 16.886579513778774, 1.1041550629170648e-05, 0.0003514761186071124],
    [0.75, 0.75, 1.0, -8.082239171587585, -23.657502192185362, -0.00028403315165138415, -0.00018616129975132604],
    [0.75, 0.75, 1.0, 25.0, 0.0, 2.1779001099380968e+32, 0.0],
    [0.75, 1.75, 2.0, -0.5, 6.123233995736766e-17, 0.5624564166247761, 4.327532086672219e-17],
    [0.75, 1.75, 2.0, -0.3686968577706227, 0.3377315902755755, 0.5940834434924219, 0.2764751304820428],
    [0.75, 1.75, 2.0, -0.16164478343175168, -0.47315004384370724, 0.6831728965266961, -0.5034415326554443],
    [0.75, 1.75, 2.0, 0.5, 0.0, 2.2409693786230234, 0.0],
    [0.75, 1.75, 2.0, -3.0, 3.6739403974420594e-16, 0.05055758341747615, 1.3150014500936669e-17],
    [0.75, 1.75, 2.0, -2.2121811466237364, 2.0263895416534528, -0.0056281226296877075, 0.06068164426462583],
    [0.75, 1.75, 2.0, -0.96986870059051, -2.8389002630622433, -0.1067321394821944, 0.0008104098767150608],
    [0.75, 1.75, 2.0, 3.0, 0.0, 194.1061539160805, 0.0],
    [0.75, 1.75, 2.0, -8.0, 9.797174393178826e-16, 0.005567031216623059, 1.5275977931932082e-18],
    [0.75, 1.75, 2.0, -5.8991497243299635, 5.403705444409208, -0.000480155416641169, 0.0052311077166823745],
    [0.75, 1.75, 2.0, -2.586316534908027, -7.570400701499316, -0.004284191234488398, -0.001824644468329739],
    [0.75, 1.75, 2.0, 8.0, 0.0, 31595059.631855607, 0.0],
    [0.75, 1.75, 2.0, -25.0, 3.061616997868383e-15, 0.0004793473322025427, 1.2229543399363165e-19],
    [0.75, 1.75, 2.0, -18.434842888531136, 16.886579513778774, 1.4722067505560865e-05, 0.0004686348248094832],
    [0.75, 1.75, 2.0, -8.082239171587585, -23.657502192185362, -0.00037871086886851217, -0.00024821506633510135],
    [0.75, 1.75, 2.0, 25.0, 0.0, 2.903866813250796e+32, 0.0],
    [0.75, 1.5, 2.0, -0.5, 6.123233995736766e-17, 0.5300547173705776, 4.730476393424273e-17],
    [0.75, 1.5, 2.0, -0.3686968577706227, 0.3377315902755755, 0.5568855793572558, 0.30555379286184964],
    [0.75, 1.5, 2.0, -0.16164478343175168, -0.47315004384370724, 0.6426733994710776, -0.5683801448828766],
    [0.75, 1.5, 2.0, 0.5, 0.0, 2.5322969883351396, 0.0],
    [0.75, 1.5, 2.0, -3.0, 3.6739403974420594e-16, 0.026844504289098337, 9.318375815502036e-18],
    [0.75, 1.5, 2.0, -2.2121811466237364, 2.0263895416534528, -0.0225756930801142, 0.03215015476441708],
    [0.75, 1.5, 2.0, -0.96986870059051, -2.8389002630622433, -0.08251212520749597, 0.07029451364687728],
    [0.75, 1.5, 2.0, 3.0, 0.0, 296.09242720033, 0.0],
    [0.75, 1.5, 2.0, -8.0, 9.797174393178826e-16, 0.0011694171185649058, 4.749351670952839e-19],
    [0.75, 1.5, 2.0, -5.8991497243299635, 5.403705444409208, -0.000870918192559346, 0.0006704104009722121],
    [0.75, 1.5, 2.0, -2.586316534908027, -7.570400701499316, -0.0005215503540722778, 0.0007622121574553172],
    [0.75, 1.5, 2.0, 8.0, 0.0, 64177464.86977231, 0.0],
    [0.75, 1.5, 2.0, -25.0, 3.061616997868383e-15, 2.995854006529356e-05, 1.1459804268249075e-20],
    [0.75, 1.5, 2.0, -18.434842888531136, 16.886579513778774, -1.950889767384393e-05, 2.145887707702253e-05],
    [0.75, 1.5, 2.0, -8.082239171587585, -23.657502192185362, -2.1047515156904155e-05, 1.7746357213317918e-05],
    [0.75, 1.5, 2.0, 25.0, 0.0, 8.519996739485503e+32, 0.0],
    [0.75, 1.0, 2.0, -0.5, 6.123233995736766e-17, 0.3225621367828587, 4.724338459458112e-17],
    [0.75, 1.0, 2.0, -0.3686968577706227, 0.3377315902755755, 0.3239480941419081, 0.3151799130961803],
    [0.75, 1.0, 2.0, -0.16164478343175168, -0.47315004384370724, 0.36854510004264346, -0.6243092999022332],
    [0.75, 1.0, 2.0, 0.5, 0.0, 2.914262083813014, 0.0],
    [0.75, 1.0, 2.0, -3.0, 3.6739403974420594e-16, -0.02581761334058691, -2.3009338799075295e-18],
    [0.75, 1.0, 2.0, -2.2121811466237364, 2.0263895416534528, -0.03504896650237358, -0.041813795987430014],
    [0.75, 1.0, 2.0, -0.96986870059051, -2.8389002630622433, 0.07198216269078296, 0.18155867943849457],
    [0.75, 1.0, 2.0, 3.0, 0.0, 683.1802635233419, 0.0],
    [0.75, 1.0, 2.0, -8.0, 9.797174393178826e-16, -0.005200395691846281, -1.3125472092403455e-18],
    [0.75, 1.0, 2.0, -5.8991497243299635, 5.403705444409208, 9.956723178794178e-05, -0.005345237803308209],
    [0.75, 1.0, 2.0, -2.586316534908027, -7.570400701499316, 0.004476100274286188, 0.0021170058799933555],
    [0.75, 1.0, 2.0, 8.0, 0.0, 264608624.38497436, 0.0],
    [0.75, 1.0, 2.0, -25.0, 3.061616997868383e-15, -0.00048350251789396694, -1.2222996953245665e-19],
    [0.75, 1.0, 2.0, -18.434842888531136, 16.886579513778774, -1.999546073138601e-05, -0.00047582650370958543],
    [0.75, 1.0, 2.0, -8.082239171587585, -23.657502192185362, 0.00038468182023180354, 0.0002581431307453949],
    [0.75, 1.0, 2.0, 25.0, 0.0, 7.334150169172163e+33, 0.0],
    [0.9, 1.0, 1.0, -0.5, 6.123233995736766e-17, 0.603405498695861, 3.618847290595761e-17],
    [0.9, 1.0, 1.0, -0.3686968577706227, 0.3377315902755755, 0.6438123373824908, 0.22531883987320064],
    [0.9, 1.0, 1.0, -0.16164478343175168, -0.47315004384370724, 0.7396045796016796, -0.3886347467575758],
    [0.9, 1.0, 1.0, 0.5, 0.0, 1.704308722099399, 0.0],
    [0.9, 1.0, 1.0, -3.0, 3.6739403974420594e-16, 0.08388835403377326, 1.8023237889127333e-17],
    [0.9, 1.0, 1.0, -2.2121811466237364, 2.0263895416534528, 0.011254660229981004, 0.09571877983544601],
    [0.9, 1.0, 1.0, -0.96986870059051, -2.8389002630622433, -0.1950459883246987, -0.07797750374717098],
    [0.9, 1.0, 1.0, 3.0, 0.0, 32.92189717685083, 0.0],
    [0.9, 1.0, 1.0, -8.0, 9.797174393178826e-16, 0.017095144580796806, 2.809409757590916e-18],
    [0.9, 1.0, 1.0, -5.8991497243299635, 5.403705444409208, 0.009090672689553396, 0.011980070102119577],
    [0.9, 1.0, 1.0, -2.586316534908027, -7.570400701499316, -0.0027963439162616913, -0.017832281549649588],
    [0.9, 1.0, 1.0, 8.0, 0.0, 26495.455316426684, 0.0],
    [0.9, 1.0, 1.0, -25.0, 3.061616997868383e-15, 0.004512147121840188, 5.942446164265569e-19],
    [0.9, 1.0, 1.0, -18.434842888531136, 16.886579513778774, 0.003106150296302614, 0.003138206618697902],
    [0.9, 1.0, 1.0, -8.082239171587585, -23.657502192185362, 0.0011186263891982664, -0.004132571490663826],
    [0.9, 1.0, 1.0, 25.0, 0.0, 3727779799664920.0, 0.0],
    [0.9, 0.9, 1.0, -0.5, 6.123233995736766e-17, 0.5319023515684373, 3.6203715877639396e-17],
    [0.9, 0.9, 1.0, -0.3686968577706227, 0.3377315902755755, 0.569816397985724, 0.22683426507343718],
    [0.9, 0.9, 1.0, -0.16164478343175168, -0.47315004384370724, 0.6629684298352261, -0.3955445745825216],
    [0.9, 0.9, 1.0, 0.5, 0.0, 1.6742480910659137, 0.0],
    [0.9, 0.9, 1.0, -3.0, 3.6739403974420594e-16, 0.044151271783037724, 1.3933082153893652e-17],
    [0.9, 0.9, 1.0, -2.2121811466237364, 2.0263895416534528, -0.026991486523226044, 0.06624761387786646],
    [0.9, 0.9, 1.0, -0.96986870059051, -2.8389002630622433, -0.2280205867571415, -0.002453769485990257],
    [0.9, 0.9, 1.0, 3.0, 0.0, 37.227740541104374, 0.0],
    [0.9, 0.9, 1.0, -8.0, 9.797174393178826e-16, 0.0025808143045736157, 8.648376280114912e-19],
    [0.9, 0.9, 1.0, -5.8991497243299635, 5.403705444409208, -0.0005486999051239123, 0.0016769282976316512],
    [0.9, 0.9, 1.0, -2.586316534908027, -7.570400701499316, -0.0081015656030056, -0.0045993786442700855],
    [0.9, 0.9, 1.0, 8.0, 0.0, 33382.196780183716, 0.0],
    [0.9, 0.9, 1.0, -25.0, 3.061616997868383e-15, 0.00017468551917377773, 4.6112564986105244e-20],
    [0.9, 0.9, 1.0, -18.434842888531136, 16.886579513778774, -2.0355930410412904e-06, 0.00016689554658114704],
    [0.9, 0.9, 1.0, -8.082239171587585, -23.657502192185362, -0.00013534577124972152, -7.892654443197152e-05],
    [0.9, 0.9, 1.0, 25.0, 0.0, 5330610105209328.0, 0.0],
    [0.9, 1.9, 2.0, -0.5, 6.123233995736766e-17, 0.5910026128538193, 4.022635097515488e-17],
    [0.9, 1.9, 2.0, -0.3686968577706227, 0.3377315902755755, 0.6331293310952488, 0.25203807230381914],
    [0.9, 1.9, 2.0, -0.16164478343175168, -0.47315004384370724, 0.7366315887058068, -0.43949397175835736],
    [0.9, 1.9, 2.0, 0.5, 0.0, 1.8602756567399041, 0.0],
    [0.9, 1.9, 2.0, -3.0, 3.6739403974420594e-16, 0.049056968647819686, 1.5481202393215166e-17],
    [0.9, 1.9, 2.0, -2.2121811466237364, 2.0263895416534528, -0.029990540581362284, 0.07360845986429605],
    [0.9, 1.9, 2.0, -0.96986870059051, -2.8389002630622433, -0.253356207507935, -0.0027264105399891214],
    [0.9, 1.9, 2.0, 3.0, 0.0, 41.36415615678265, 0.0],
    [0.9, 1.9, 2.0, -8.0, 9.797174393178826e-16, 0.002867571449526237, 9.60930697790545e-19],
    [0.9, 1.9, 2.0, -5.8991497243299635, 5.403705444409208, -0.0006096665612487913, 0.0018632536640351659],
    [0.9, 1.9, 2.0, -2.586316534908027, -7.570400701499316, -0.009001739558895112, -0.005110420715855649],
    [0.9, 1.9, 2.0, 8.0, 0.0, 37091.329755759696, 0.0],
    [0.9, 1.9, 2.0, -25.0, 3.061616997868383e-15, 0.00019409502130419726, 5.123618331789466e-20],
    [0.9, 1.9, 2.0, -18.434842888531136, 16.886579513778774, -2.2617700456014444e-06, 0.00018543949620127427],
    [0.9, 1.9, 2.0, -8.082239171587585, -23.657502192185362, -0.00015038419027746817, -8.769616047996824e-05],
    [0.9, 1.9, 2.0, 25.0, 0.0, 5922900116899256.0, 0.0],
    [0.9, 1.8, 2.0, -0.5, 6.123233995736766e-17, 0.5912515494728086, 4.2721463909414043e-17],
    [0.9, 1.8, 2.0, -0.3686968577706227, 0.3377315902755755, 0.6339557061272119, 0.26876985075484167],
    [0.9, 1.8, 2.0, -0.16164478343175168, -0.47315004384370724, 0.7415455204094545, -0.47211132762400004],
    [0.9, 1.8, 2.0, 0.5, 0.0, 1.973863498402023, 0.0],
    [0.9, 1.8, 2.0, -3.0, 3.6739403974420594e-16, 0.037924083263828685, 1.3972410933744485e-17],
    [0.9, 1.8, 2.0, -2.2121811466237364, 2.0263895416534528, -0.04227513726736417, 0.0598471589008824],
    [0.9, 1.8, 2.0, -0.96986870059051, -2.8389002630622433, -0.2659957506204077, 0.04842807503718747],
    [0.9, 1.8, 2.0, 3.0, 0.0, 48.104537769486186, 0.0],
    [0.9, 1.8, 2.0, -8.0, 9.797174393178826e-16, 0.0008827418940440877, 4.425688043974629e-19],
    [0.9, 1.8, 2.0, -5.8991497243299635, 5.403705444409208, -0.0004156290729327537, -6.34396742858798e-05],
    [0.9, 1.8, 2.0, -2.586316534908027, -7.570400701499316, -0.010327334457025796, -0.0035634622350400593],
    [0.9, 1.8, 2.0, 8.0, 0.0, 47195.78704897267, 0.0],
    [0.9, 1.8, 2.0, -25.0, 3.061616997868383e-15, 1.5061506719557217e-05, 5.977453240846284e-21],
    [0.9, 1.8, 2.0, -18.434842888531136, 16.886579513778774, -1.0120075696273358e-05, 9.699107857221787e-06],
    [0.9, 1.8, 2.0, -8.082239171587585, -23.657502192185362, -9.02132617419885e-06, 8.956778151305746e-06],
    [0.9, 1.8, 2.0, 25.0, 0.0, 8493256036147692.0, 0.0],
    [0.9, 1.0, 2.0, -0.5, 6.123233995736766e-17, 0.3079041922689513, 5.226377032433777e-17],
    [0.9, 1.0, 2.0, -0.3686968577706227, 0.3377315902755755, 0.325258323476097, 0.3462209704171273],
    [0.9, 1.0, 2.0, -0.16164478343175168, -0.47315004384370724, 0.41258533396983044, -0.666130107365948],
    [0.9, 1.0, 2.0, 0.5, 0.0, 2.634446550469351, 0.0],
    [0.9, 1.0, 2.0, -3.0, 3.6739403974420594e-16, -0.06328255190968582, -1.0397131401390835e-17],
    [0.9, 1.0, 2.0, -2.2121811466237364, 2.0263895416534528, -0.07156024456510279, -0.12788898509096572],
    [0.9, 1.0, 2.0, -0.96986870059051, -2.8389002630622433, 0.04293625983837092, 0.6439197606432536],
    [0.9, 1.0, 2.0, 3.0, 0.0, 157.01436564719873, 0.0],
    [0.9, 1.0, 2.0, -8.0, 9.797174393178826e-16, -0.005845427015413109, -2.068626067142534e-18],
    [0.9, 1.0, 2.0, -5.8991497243299635, 5.403705444409208, 0.0026187130476151596, -0.0023060007527246126],
    [0.9, 1.0, 2.0, -2.586316534908027, -7.570400701499316, -0.01820292862442583, 0.06353165951947809],
    [0.9, 1.0, 2.0, 8.0, 0.0, 323226.09336250415, 0.0],
    [0.9, 1.0, 2.0, -25.0, 3.061616997868383e-15, -0.0003402284107647478, -9.241535009425414e-20],
    [0.9, 1.0, 2.0, -18.434842888531136, 16.886579513778774, 1.6406874145364355e-05, -0.0003185349188178908],
    [0.9, 1.0, 2.0, -8.082239171587585, -23.657502192185362, 0.0002593952738452112, 0.00013392416392443265],
    [0.9, 1.0, 2.0, 25.0, 0.0, 1.5180028272214627e+17, 0.0],
];
