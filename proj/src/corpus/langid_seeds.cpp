#include "newsbias/corpus/langid.hpp"

namespace newsbias::corpus {

// Bundled seed text per language so the pipeline works without external
// training data. Plain news-register prose, written for this project.

namespace {

const char* kEnglish = R"(
The city council met on tuesday evening to discuss the new transport plan for
the coming year. Residents asked questions about bus routes, ticket prices and
the schedule for road repairs in the northern districts. Officials said that
work on the central station would begin in the spring and continue through the
summer months. Hospitals in the region reported that emergency services were
operating normally despite the heavy rain that fell during the weekend. The
national weather service expects colder temperatures and strong winds along
the coast by the end of the week. Schools will remain open, although several
sports events have been moved indoors as a precaution. In economic news, small
businesses reported steady growth in the last quarter, while exporters warned
that shipping delays could raise prices before the holidays. The finance
minister told reporters that the government would present its budget proposal
next month and that public investment in housing remained a priority. Local
journalists covered the announcement live, and many readers followed updates
online throughout the afternoon. Football fans celebrated late into the night
after the home team won the regional cup for the first time in twenty years.
)";

const char* kFrench = R"(
Le conseil municipal s'est réuni mardi soir pour discuter du nouveau plan de
transport pour l'année à venir. Les habitants ont posé des questions sur les
lignes de bus, le prix des billets et le calendrier des travaux dans les
quartiers du nord. Les responsables ont indiqué que le chantier de la gare
centrale commencerait au printemps et se poursuivrait pendant l'été. Les
hôpitaux de la région ont annoncé que les services d'urgence fonctionnaient
normalement malgré les fortes pluies tombées pendant le week-end. La météo
nationale prévoit des températures plus froides et des vents violents sur la
côte d'ici la fin de la semaine. Les écoles resteront ouvertes, même si
plusieurs événements sportifs ont été déplacés à l'intérieur par précaution.
Côté économie, les petites entreprises ont enregistré une croissance régulière
au dernier trimestre, tandis que les exportateurs ont averti que les retards
de livraison pourraient faire monter les prix avant les fêtes. Le ministre des
finances a déclaré aux journalistes que le gouvernement présenterait son
projet de budget le mois prochain et que l'investissement public dans le
logement restait une priorité. Les supporters ont fêté la victoire de leur
équipe tard dans la nuit après la finale de la coupe régionale.
)";

const char* kGerman = R"(
Der Stadtrat traf sich am Dienstagabend, um den neuen Verkehrsplan für das
kommende Jahr zu besprechen. Die Anwohner stellten Fragen zu Buslinien,
Fahrpreisen und dem Zeitplan für die Straßenarbeiten in den nördlichen
Bezirken. Die Verwaltung erklärte, dass die Arbeiten am Hauptbahnhof im
Frühjahr beginnen und den ganzen Sommer über andauern würden. Die
Krankenhäuser der Region meldeten, dass der Rettungsdienst trotz des starken
Regens am Wochenende normal arbeitete. Der Wetterdienst erwartet bis zum Ende
der Woche kältere Temperaturen und starken Wind an der Küste. Die Schulen
bleiben geöffnet, obwohl mehrere Sportveranstaltungen vorsichtshalber in die
Halle verlegt wurden. In den Wirtschaftsnachrichten berichteten kleine
Unternehmen von einem stetigen Wachstum im letzten Quartal, während die
Exporteure warnten, dass Lieferverzögerungen die Preise vor den Feiertagen
erhöhen könnten. Der Finanzminister sagte den Journalisten, die Regierung
werde ihren Haushaltsentwurf im nächsten Monat vorlegen, und die öffentlichen
Investitionen in den Wohnungsbau blieben eine Priorität. Die Fußballfans
feierten bis spät in die Nacht, nachdem ihre Mannschaft zum ersten Mal seit
zwanzig Jahren den regionalen Pokal gewonnen hatte.
)";

const char* kSpanish = R"(
El ayuntamiento se reunió el martes por la noche para discutir el nuevo plan
de transporte para el próximo año. Los vecinos hicieron preguntas sobre las
líneas de autobús, el precio de los billetes y el calendario de las obras en
los barrios del norte. Los responsables señalaron que los trabajos en la
estación central comenzarían en primavera y continuarían durante el verano.
Los hospitales de la región informaron de que los servicios de urgencia
funcionaban con normalidad a pesar de las fuertes lluvias caídas durante el
fin de semana. El servicio meteorológico nacional espera temperaturas más
frías y vientos fuertes en la costa para finales de la semana. Las escuelas
permanecerán abiertas, aunque varios eventos deportivos se han trasladado a
recintos cubiertos por precaución. En las noticias económicas, las pequeñas
empresas registraron un crecimiento estable en el último trimestre, mientras
que los exportadores advirtieron de que los retrasos en los envíos podrían
subir los precios antes de las fiestas. El ministro de hacienda dijo a los
periodistas que el gobierno presentaría su propuesta de presupuesto el mes que
viene y que la inversión pública en vivienda seguía siendo una prioridad. Los
aficionados celebraron hasta la madrugada la victoria de su equipo en la copa
regional, la primera en veinte años.
)";

const char* kArabic = R"(
اجتمع المجلس البلدي مساء الثلاثاء لمناقشة خطة النقل الجديدة للعام المقبل. طرح
السكان أسئلة حول خطوط الحافلات وأسعار التذاكر وجدول أعمال إصلاح الطرق في
الأحياء الشمالية. وقال المسؤولون إن العمل في المحطة المركزية سيبدأ في الربيع
ويستمر طوال أشهر الصيف. وأفادت المستشفيات في المنطقة بأن خدمات الطوارئ تعمل
بشكل طبيعي رغم الأمطار الغزيرة التي هطلت خلال عطلة نهاية الأسبوع. وتتوقع
هيئة الأرصاد الجوية الوطنية درجات حرارة أكثر برودة ورياحا قوية على الساحل
بحلول نهاية الأسبوع. وستبقى المدارس مفتوحة رغم نقل عدد من الفعاليات الرياضية
إلى قاعات مغلقة كإجراء احترازي. وفي الأخبار الاقتصادية أعلنت الشركات الصغيرة
عن نمو مطرد في الربع الأخير بينما حذر المصدرون من أن تأخر الشحنات قد يرفع
الأسعار قبل الأعياد. وقال وزير المالية للصحفيين إن الحكومة ستقدم مشروع
الميزانية الشهر المقبل وإن الاستثمار العام في الإسكان يبقى أولوية. وغطى
الصحفيون المحليون الإعلان مباشرة وتابع كثير من القراء التحديثات عبر الإنترنت
طوال فترة بعد الظهر. واحتفل مشجعو كرة القدم حتى وقت متأخر من الليل بعد فوز
الفريق المحلي بكأس المنطقة للمرة الأولى منذ عشرين عاما.
)";

}  // namespace

const std::map<std::string, std::string>& builtin_langid_seed_texts() {
    static const std::map<std::string, std::string> seeds = {
        {"en", kEnglish}, {"fr", kFrench}, {"de", kGerman}, {"es", kSpanish}, {"ar", kArabic},
    };
    return seeds;
}

}  // namespace newsbias::corpus
