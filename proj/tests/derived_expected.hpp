// Expected values computed by an independent exact implementation (oracle
// for the cross-implementation checks). Frozen; do not edit by hand.
#pragma once

namespace derived {

inline const char* kThetaTrueA[10] = {
    "637749516571767022894466850492/1034091817872711427691717568211",
    "637749516571767022894466850492/1034091817872711427691717568211",
    "0",
    "0",
    "637749516571767022894466850492/1034091817872711427691717568211",
    "637749516571767022894466850492/1034091817872711427691717568211",
    "0",
    "0",
    "467854365342185684009389622952/1034091817872711427691717568211",
    "467854365342185684009389622952/1034091817872711427691717568211",
};
inline const char* kThetaTrueC = "-578863339288380788821158235608/1034091817872711427691717568211";
inline const char* kMabuchiTrue = "4183342490826592716564422113248/1034091817872711427691717568211";
inline const int kArgmaxTrue[10] = {-1, 4, -1, -1, 0, 3, -1, -1, 1, 1};
inline const int kPMinusTrueCount = 380;
inline const char* kVolPMinusTrue = "4821457503550613863829683665228726487240205790410831427832341679423352485480927906149265162197678755810596992178687856822002187993436401574452080921661530972981949589432018984711305497455474613/36290840450631709052479225815390426946634500710509884787149065810550572697542935269117932270822414716054725553747833585455282374788421575198595983201235390866910984792940806034548134930022400";
inline const char* kIntegralTrue = "22349490330002855344698276757821423038954957645054448769625514719441674205005163002556522216996982108298626398350016735554259463745016788204323708854865302691259388566207003647248338225328185981905729041295834552656416178537564653850496211179250340751893/597634899405740916919198576323671035727703967700723310241308806900431362189808606977481348774748663650589960036145708192502611021100219644473388463826789046518708358383666413426323792406026601098033762548813399120369231632900281655027594558520332124160";
inline const char* kLhsMinusRhsTrue = "507480374141801936636121397315733031281219724972234475117473564203290916304420757832709253119271324309051167698455133021488299351830338834409027166089083331320882229168928853833829364595464875665785874302362898208982847740301408176488626018316191487505144/396997043102837333309584374286312509980085991329714456831945686639097481775723009181631025372287310249382176799861357244890465153784623627938718480381098876177682789857397379337020540076082793790450549683112519718855261196631704579892871525188156560789721";
inline const char* kDestabTrue = "63435046767725242079515174664466628910152465621529309389684195525411364538052594729088656639908915538631395962306891627686037418978792354301128395761135416415110278646116106729228670574433109458223234287795362276122855967537676022061078252289523935938143/373521812128588073074499110202294397329814979812952068900818004312769601368630379360925842984217914781618725022591067620314131888187637277795867789891743154074192723989791508391452370253766625686271101593008374450230769770562676034392246599075207577600";
inline const char* kDestabRef = "304784685592480802123125303484621041014067587970523918424754676870545349804551080680583353589875630776819114346823592209094779719566861548725221855049905691824558132367226343170834340238836531394803103596422708044526172548262140562026494926921011938894889616568566738131742004384098435620256852966637152820606358191828519323494146305962634639987727525260241539174443686231504383091227990808765004905849872065050876272208745972336499045038380437890606621283151407034072544112113122710922688226403943389770750815414484573743278143926346970829675840429485435011602862926353986009899975312413251996679197306085379597862240398048125490194843915096671786154474835422701946764175971041874056919189979570944770075016671920221789266564977363006230745278175697841802542358086172497746142295380807427160979082143400947863317432144096448979381032609092625007003550412250469842127269925088260444439741219328465378024190644090832048012014007270077534836922139590386233820307925282719013958259790165148499042802537867073685236425228091632697405060621929542248159636477981326693922441617810582980448250733968363388862988067705539515313685158714630211113286551775986450192508139790644472963686375866905727231465751851912415033286605723293125998460215029836102005747612331895913755679491648693917153369213074449801820299652741787569907842315093345202732603607142252807309288627347179403180734686705689978832639423691073212350384335329871911573576702271393527837397130911279506139973999785776989727173224527037192167702477555203677816161708676592801269609357466434769815644671610538463066352786867340178874815318189813079784480927926726352577663602509635923525000023380030087137325533052944740200466191948671032427778386643408043465190391856751829971877371340015848667357254996005927926930465617299538036342838604709690217188410174028967959041018910675378091897563426365696537521165524959350464328380449505824130211766641316761546253572774827890471580888285751694128432408687191002043729007069969373688904762771768379839020316534352930114322961814003888261462344563103440145208826060383338086821698305978621985837769762296879811071078825170296266938110619936669692375129536598298497023039104897569193675815287971346699227009006637408272093095185254928820515023337089702969358296755350155849536057192255900051715493945111599128147538844665338065498297846489367007613055254732206192255442598245691711754525285239906744684689906358916104351003941350366955308913457937970362806778627325186496390465507826150247816506763040297155511240918558191144454695901027485466517901478234242883185661937375661273553445006182133883718586680214195506119130003725694583995105683057572254181062293686077136045030871356478070539083322921888882512960647847066300931699753/8901284601464646302079079606933391203720202412653554663364205117007263218989712437739226670045415473607956314689663677867640330327438638044103410937809725665453388583961133444302681777586615057902478803915747377431829316580192637393848295810824270604677472940297218779126460759040765158819427981793545910516120984559428385177107316044303919991660439361301174122819041338974825743020509898310180164179257788686457837299196805608077724570855723225091497157315212949031215279616227559264568064471940685019645024548886693481395625662176237729976985367018667951534886761898804044659264071942113086527128444727575795793251270323153943082978693306041061801577178003864169959576100914795242774522736154182767373503594830305625010744900438629057548503196498598657844348225224927138937126426759711018743249726528157731061592156180550638172585872513680781669744408170328217580072002585263364653917212193194826426736479240014961722139056560381287727264621318186835680342929594133846754974644632976797692720637056290039816431839229109534026378955179052982073230819247296468968320012322067712927171597262256148661116820270238034609151883128761770818104496508827787493121708501060407900978922287319738235953460656005950284769421872009190446829308209593213266659185098192871553007773690885557957880032504236450479091441252869847836357478808610412308160093786330810410910605653225199559157582054115090630948037542343191635174334334789350004653600518783313245097374963159687542234455163606898869481133120820187735238857956254346504248065747480105816550883634141778117041262185414725710515616253245342712163501941405762167685940381001514561739060258845869426514675706834388818735411075724187190032807217355789565790824166232742715856056971135908995579548262913609682067591406148303490630200278406849383592927897217738770797508232550820072579444166726717106312111056358478056922182553751030540192239744789722918035167366428464322096903996123310987773746658641375341320804016439051896245596587180273449904386574265017548266016585864589378558456294828038056158983363948171387950189196343243748855767138246371372598336224687897030879405777661928544450211555680003092971228095787823456826774124021469755035166147818129066219384774063949077948480262168346418775310883123306514076953537685368062686269098616716821683055852113638930460924898866970837447200384113679780845682967794690197150363227420559733849569778570389542124277531149033301977324057202466300444922879408845016576971525590731494868181870270718736199520732141183430894237519910872757507448578400978585614547992121424637798266603478040234017681636455901934963045110935667792966759393519650961684225185653759646111787501683493318128889273410826618355520720033754974741493005448600365301760000";
inline const char* kIntegralRefCorrected = "79850977074804656285814824059486913743692837192423662563568532589642334776828570070409146430526895478723663402417371136807992674883767413423880653500287940296212230321425327880381067819962696404500089084125861387614212506852696990545927986844432731069954865197157791717443730908736213585192220462965839165708790563349382847365169996194454373037017208006354909351609082410847542325422247216954965641348506865842455211329667117341019904331498940643219524483149103737066075452161776338481318586879538606352978899219079043054343295926812756956606751263356609266163300102226526400244285468008620818901059988980748273531114288596735937637432348772681260238661229933481600708368006092218217023610167656550521056601862243092141804656613790938320775711429228372175559555220343616558245088140609213413257629218850745997835696328729114128472082593059373808048274391946221912134125024306221032958384352565568381474643080278670842206834539448773135024996715071357059370561144129981363876925643554041141625324434833537344073348134039331136680715815954573524458124320552587739898485041268259678788075454788533945976765043063816330817811664194280354977172581164814240423649814343583279589964787480997939759502880229483434971398383414116539941711843612148038913568045319093589389351456432623340151784866388417928135694564605298026070246037784578276115043122294849413018144132409411992332296379521541164648713318754709473810470901916273864562325744559173763309532797335535192568876193144246777562062492882430801385838186463778463100346904225128810814071501567967698234742161207176299138603566462479898730981502965032824276697158270534991397095540114702148370623466344899310155388011871956847437463624780294682521875787477657231663613762935685767826608008314628980499376287027383095012697128828032377090589521402047110381973882522446571437462076218229012979664057796133418529099280421791574009958182745335194148711462244514008492965848975363014649712448797974466062526334283057957487641793295989406080927400010488702603952661229539466197146289848852379425220872760822703522289540410993697041390705178513538457039585468844788679676057349698251220144408391537869004229073259088412004439978207090945062337485084624244039754888058757680582053032329678432339084833624711056558129135576999343093079714051660460762735295328151986642447147182891393053291486885238381746080088121820155638644706122514873348626390547014917062856185519511072881643548622454406862401556548275251779789770258472053509503165233192873530947247269413937309805395346503726708413257978771538114048501320284057917130138086548993678045545901293195403140430537356355988901789907120780005913747210450869646378368829968627381515553642056016123660947083872733861507213904419413137813051/57427642590094492271477932947957362604646467178410030086220678174240407864449757662833720451905906281341653643159120502371873098886700890607118780243933713970667023122329893189049559855397516502596637444617725015689221397291565402540956747166608197449532083485788508252428779090585581669802761172861586519458845061673731517271660103511638193494583479750330155631090589283708553180777483214904388155995211539912631208381914874890824029489391762742525788111711051284072356642685339092029471383689939903352548545476688345041262101046298307935335389464636567429257333947734219642962994012529761848562118998242424488988717873052606084406314150361555237429530180670091419094039360740614469513049910672146886280668353743907258133838067345993919667762558055475211899020807902755735078235011352974314472578880826824071365110685035810568855392725894714720449963923679536887613367758614602352605917498020611783398299866064612656271864881034717985337191105278624746324793094155702237128868675051463210920778303588967998815689285349093767912122291477761174666005285466428832053677498852049760820461917821007410716882711420890545865496020185559811729706429089211532213688441942325212264380143789159601522280391329070646998512399174252841592447149739311053333285065149631429374243701231519728760516338737009357929622201631418373137790185862002660052645766363424583296197455827259351994565045510419939554503468015117365388221511837350645191313551734085891903854032020385080917641646216818702383749245940775404743476502943576429059664940306323263332586346026721149142201691518804682003326556472550598142990335105843626888296389554848481043477808121586254364610811011834766572486523069188304451824562692617997198650478491824146553910044975070380616642246857507159239145751007408409616969034054237737958664050949791863037403278919682710145673833333720755524594264879732116496272145508071164775433804805094986567968821718893318207076799974989103146927397797686292524650348493155173524165139272130796450996042414613016440425913457190899216506169644051858426832150735149492825485091589311249992617852504815299178053782094760626005673585662335022867420719714064536083685342553469828753721123380783675838936555792375026233673450155251284373861162981731267217905231504021332348883571210873342339911413539462689172148747432991218906199515476561102177078712155572127618359244953514130304195891789810062799029482442389609949188887297735698722434348756144943873838212125218354945657880810262783837859237872714314427093682142846344715446693676844340371015797280006313455577728981428546050311397441793807961404397654554206032019645877004308341721028345288070720543388294540384813624435494732214955670253376844042699067875613120999837041890357732905582592000";
inline const char* kX1A[5] = {"54511901556/87902076167", "0", "54511901556/87902076167", "0", "36242866380/87902076167"};
inline const char* kX1C = "-24422078576/87902076167";
inline const char* kX1VolPMinus = "1201233587404718949245931252215521/823074760291036460870875679050752";
inline const char* kX1Integral = "17672927630745394423786197269336694454304430368190161281/95395702145931058229246066744266167390543866376347857920";

}  // namespace derived
